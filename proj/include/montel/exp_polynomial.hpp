#pragma once

#include <optional>
#include <vector>

#include "montel/polynomial.hpp"

namespace montel {

/// One exponential monomial bundle p(n) * lambda^n: a nonzero polynomial part
/// attached to a vector of nonzero scalars.
struct ExpMonomialTerm {
    std::vector<GaussianRational> lambda;
    Polynomial poly;

    ExpMonomialTerm(std::vector<GaussianRational> l, Polynomial p);
};

/// Finite sum of exponential monomials with pairwise distinct lambda vectors.
/// Construction normalizes: equal lambdas merge, zero parts drop, and terms
/// are sorted by lambda (componentwise lexicographic on (re, im)), so equal
/// functions compare equal structurally.
class ExpPolynomial {
public:
    explicit ExpPolynomial(int dim) : dim_(dim) {
        if (dim < 1) throw input_error("dimension must be positive");
    }
    ExpPolynomial(int dim, std::vector<ExpMonomialTerm> rawTerms);

    static ExpPolynomial from_polynomial(const Polynomial& p);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<ExpMonomialTerm>& terms() const { return terms_; }

    GaussianRational evaluate(const LatticeVector& n) const;

    /// True when every term carries the all-ones lambda (or there are none).
    bool is_polynomial() const;
    std::optional<Polynomial> as_polynomial() const;

    ExpPolynomial operator+(const ExpPolynomial& o) const;
    ExpPolynomial scaled(const GaussianRational& c) const;

    bool operator==(const ExpPolynomial& o) const;

private:
    int dim_;
    std::vector<ExpMonomialTerm> terms_;
};

/// Re-canonicalizes (merge duplicate lambdas, drop zero parts, sort);
/// idempotent on already-valid values and never changes pointwise values.
ExpPolynomial normalize(const ExpPolynomial& f);

bool is_all_ones(const std::vector<GaussianRational>& lambda);

/// Componentwise (re, im)-lexicographic comparison of lambda vectors.
int lambda_cmp(const std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b);

/// One exponential block of an ambient space: functions n^alpha * lambda^n
/// with |alpha| <= maxDegree.
struct ExpModuleSpec {
    std::vector<GaussianRational> lambda;
    int maxDegree = 0;
};

/// Finite-dimensional ambient P + E_1 + ... + E_s. The pure polynomial part P
/// (lambda = all-ones) is described by polyDegree and must not reappear among
/// the exponential blocks.
struct AmbientSpec {
    int dim = 1;
    std::optional<int> polyDegree;
    std::vector<ExpModuleSpec> expModules;

    void validate() const;
};

} // namespace montel
