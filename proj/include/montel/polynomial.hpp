#pragma once

#include <map>
#include <optional>
#include <vector>

#include "montel/multi_index.hpp"
#include "montel/scalar.hpp"

namespace montel {

/// Sparse exact polynomial over the Gaussian rationals in d variables.
/// Invariant: no stored coefficient is zero; all keys have dimension d.
/// The zero polynomial is the empty term map and its degree is "absent".
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, GaussianRational, GrlexLess>;

    explicit Polynomial(int dim) : dim_(dim) {
        if (dim < 1) throw input_error("polynomial dimension must be positive");
    }

    static Polynomial constant(int dim, const GaussianRational& c) {
        Polynomial p(dim);
        p.add_term(MultiIndex(std::vector<int>(dim, 0)), c);
        return p;
    }
    static Polynomial monomial(const MultiIndex& alpha, const GaussianRational& c) {
        Polynomial p(alpha.dim());
        p.add_term(alpha, c);
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    GaussianRational coeff(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    /// Accumulates c * x^alpha, dropping the term if the sum cancels.
    void add_term(const MultiIndex& alpha, const GaussianRational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const GaussianRational& c) const;

    /// p(x + h) by exact multinomial expansion; h may be any rational
    /// (or Gaussian rational) shift vector.
    Polynomial shifted(const std::vector<GaussianRational>& h) const;

    GaussianRational evaluate(const LatticeVector& n) const;
    GaussianRational evaluate_at(const std::vector<GaussianRational>& x) const;

    struct Degrees {
        std::optional<int> total;                     // absent for the zero polynomial
        std::vector<std::optional<int>> perVariable;  // entries absent likewise
    };
    Degrees degrees() const;

    bool operator==(const Polynomial&) const = default;

private:
    int dim_;
    TermMap terms_;
};

} // namespace montel
