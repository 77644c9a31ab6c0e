#pragma once

#include <map>
#include <optional>
#include <vector>

#include "montel/elimination.hpp"
#include "montel/exp_polynomial.hpp"

namespace montel {

/// Ordered basis {n^alpha lambda^n : |alpha| <= maxDegree} of one block of the
/// ambient space, sorted by grlex. lambda = all-ones describes the pure
/// polynomial block P.
class ModuleBasis {
public:
    ModuleBasis(int dim, std::vector<GaussianRational> lambda, int maxDegree);

    int dim() const { return dim_; }
    const std::vector<GaussianRational>& lambda() const { return lambda_; }
    int maxDegree() const { return maxDegree_; }
    bool isPolynomialModule() const { return is_all_ones(lambda_); }

    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<MultiIndex>& basis() const { return basis_; }
    int indexOf(const MultiIndex& alpha) const; // -1 when absent

private:
    int dim_;
    std::vector<GaussianRational> lambda_;
    int maxDegree_;
    std::vector<MultiIndex> basis_;
    std::map<MultiIndex, int, GrlexLess> index_;
};

/// d_k(h) = lambda^h - 1: the constant diagonal of Delta_h on the block.
GaussianRational diagonal_factor(const std::vector<GaussianRational>& lambda,
                                 const LatticeVector& h);

/// Delta_h restricted to the block is invertible iff its diagonal factor is
/// nonzero (the matrix is triangular with that constant diagonal).
bool is_invertible_on_module(const std::vector<GaussianRational>& lambda, const LatticeVector& h);

/// Matrix of Delta_h on the block in the grlex basis: column j holds the
/// coordinates of Delta_h applied to the j-th basis monomial. Upper
/// triangular with every diagonal entry equal to diagonal_factor(lambda, h).
ExactMatrix operator_matrix(const LatticeVector& h, const ModuleBasis& module);

/// Coordinates of the polynomial part in the block basis; input_error if the
/// polynomial has support outside the block.
std::vector<GaussianRational> coordinates(const ModuleBasis& module, const Polynomial& p);

/// Block-diagonal matrix of Delta_h on a whole ambient space: the polynomial
/// block first, then the exponential blocks in order. Blocks never mix.
ExactMatrix ambient_operator_matrix(const LatticeVector& h, const AmbientSpec& ambient);

/// Checks the total-degree bound: when every per-variable degree is <= m-1,
/// the total degree is <= (m-1) d. Reports both degree profiles.
struct DegreeBoundReport {
    int m = 1;
    int dim = 1;
    int bound = 0;                 // (m-1) * dim
    bool vacuous = false;          // zero polynomial
    bool applicable = false;       // all per-variable degrees <= m-1
    std::optional<bool> pass;      // absent when not applicable
    std::optional<int> totalDegree;
    std::vector<std::optional<int>> perVariable;
};
DegreeBoundReport degree_bound_check(const Polynomial& p, int m);

} // namespace montel
