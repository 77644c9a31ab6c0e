#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "montel/sample_table.hpp"

namespace montel {

/// The three function representations the difference operators act on.
using FunctionValue = std::variant<Polynomial, ExpPolynomial, SampleTable>;

int function_dim(const FunctionValue& f);

/// (Delta_h f)(n) = f(n + h) - f(n).
/// Tables shrink to the window where both n and n + h are sampled; an empty
/// result window is an input_error.
Polynomial delta(const LatticeVector& h, const Polynomial& f);
ExpPolynomial delta(const LatticeVector& h, const ExpPolynomial& f);
SampleTable delta(const LatticeVector& h, const SampleTable& f);
FunctionValue delta(const LatticeVector& h, const FunctionValue& f);

/// m-th power Delta_h^m by the binomial expansion
/// sum_{k=0..m} C(m,k) (-1)^(m-k) f(x + k h); identical to iterating delta.
Polynomial delta_power(const LatticeVector& h, int m, const Polynomial& f);
ExpPolynomial delta_power(const LatticeVector& h, int m, const ExpPolynomial& f);
SampleTable delta_power(const LatticeVector& h, int m, const SampleTable& f);
FunctionValue delta_power(const LatticeVector& h, int m, const FunctionValue& f);

/// Mixed difference Delta_{h_1 h_2 ... h_s} = Delta_{h_1} ( Delta_{h_2 ... h_s} ).
/// The last step is applied first, matching the recursive definition; the
/// operators commute, so the order does not affect the result.
Polynomial delta_mixed(const std::vector<LatticeVector>& steps, const Polynomial& f);
ExpPolynomial delta_mixed(const std::vector<LatticeVector>& steps, const ExpPolynomial& f);
SampleTable delta_mixed(const std::vector<LatticeVector>& steps, const SampleTable& f);
FunctionValue delta_mixed(const std::vector<LatticeVector>& steps, const FunctionValue& f);

/// Rational-step variants on polynomials (fractional steps h_r / r arise in
/// the Djokovic expansion; polynomials accept any rational shift).
/// Step components must be real.
Polynomial delta_rational(const std::vector<GaussianRational>& h, const Polynomial& f);
Polynomial delta_power_rational(const std::vector<GaussianRational>& h, int m, const Polynomial& f);

/// Djokovic's identity: expands the mixed difference Delta_{h_1...h_s} p and
/// the signed sum over epsilon in {0,1}^s of equal-step powers Delta^s at
/// shifted arguments, and compares them exactly.
struct DjokovicResult {
    bool equal;
    Polynomial lhs, rhs;
};
DjokovicResult djokovic_check(const std::vector<std::vector<GaussianRational>>& steps,
                              const Polynomial& p);

/// Per-step verdict for the system Delta_{h_j}^m f = 0.
enum class StepStatus { holds, fails, window_too_small };

struct StepVerdict {
    LatticeVector step;
    StepStatus status;
    std::optional<Box> window;  // table checks: the shrunken domain actually used
    std::optional<FunctionValue> residual;  // symbolic failure certificate
    std::optional<std::pair<LatticeVector, GaussianRational>> counterpoint;  // table failure
};

struct FrechetReport {
    std::vector<StepVerdict> perStep;
    // true: all steps hold; false: some step fails; nullopt: nothing failed
    // but at least one window was too small to check.
    std::optional<bool> overall;
};

FrechetReport is_frechet_solution(const FunctionValue& f, const std::vector<LatticeVector>& steps,
                                  int m);

/// Domain {n : n + k h in box for k = 0..m}; may be empty.
Box shrunken_box(const Box& box, const LatticeVector& h, int m);

} // namespace montel
