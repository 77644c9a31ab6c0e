#include "montel/exp_polynomial.hpp"

#include <algorithm>

namespace montel {

bool is_all_ones(const std::vector<GaussianRational>& lambda) {
    return std::all_of(lambda.begin(), lambda.end(),
                       [](const GaussianRational& v) { return v.is_one(); });
}

int lambda_cmp(const std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b) {
    if (a.size() != b.size()) throw input_error("lambda comparison: dimension mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (int c = GaussianRational::lex_cmp(a[k], b[k]); c != 0) return c;
    }
    return 0;
}

ExpMonomialTerm::ExpMonomialTerm(std::vector<GaussianRational> l, Polynomial p)
    : lambda(std::move(l)), poly(std::move(p)) {
    if (static_cast<int>(lambda.size()) != poly.dim()) {
        throw input_error("exponential monomial: lambda dimension mismatch");
    }
    for (const auto& v : lambda) {
        if (v.is_zero()) throw input_error("exponential monomial: lambda component is zero");
    }
}

ExpPolynomial::ExpPolynomial(int dim, std::vector<ExpMonomialTerm> rawTerms) : dim_(dim) {
    if (dim < 1) throw input_error("dimension must be positive");
    for (auto& t : rawTerms) {
        if (static_cast<int>(t.lambda.size()) != dim_) {
            throw input_error("exponential polynomial: term dimension mismatch");
        }
        bool merged = false;
        for (auto& u : terms_) {
            if (lambda_cmp(u.lambda, t.lambda) == 0) {
                u.poly = u.poly + t.poly;
                merged = true;
                break;
            }
        }
        if (!merged) terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const ExpMonomialTerm& t) { return t.poly.is_zero(); });
    std::sort(terms_.begin(), terms_.end(), [](const ExpMonomialTerm& a, const ExpMonomialTerm& b) {
        return lambda_cmp(a.lambda, b.lambda) < 0;
    });
}

ExpPolynomial ExpPolynomial::from_polynomial(const Polynomial& p) {
    ExpPolynomial out(p.dim());
    if (!p.is_zero()) {
        out.terms_.emplace_back(std::vector<GaussianRational>(p.dim(), GaussianRational(1)), p);
    }
    return out;
}

GaussianRational ExpPolynomial::evaluate(const LatticeVector& n) const {
    if (n.dim() != dim_) throw input_error("evaluate: dimension mismatch");
    GaussianRational acc = 0;
    for (const auto& t : terms_) {
        acc += t.poly.evaluate(n) * vector_power(t.lambda, n.entries);
    }
    return acc;
}

bool ExpPolynomial::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const ExpMonomialTerm& t) { return is_all_ones(t.lambda); });
}

std::optional<Polynomial> ExpPolynomial::as_polynomial() const {
    if (!is_polynomial()) return std::nullopt;
    if (terms_.empty()) return Polynomial(dim_);
    return terms_.front().poly;
}

ExpPolynomial ExpPolynomial::operator+(const ExpPolynomial& o) const {
    if (dim_ != o.dim_) throw input_error("sum: dimension mismatch");
    std::vector<ExpMonomialTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return {dim_, std::move(all)};
}

ExpPolynomial ExpPolynomial::scaled(const GaussianRational& c) const {
    ExpPolynomial out(dim_);
    if (c.is_zero()) return out;
    for (const auto& t : terms_) out.terms_.emplace_back(t.lambda, t.poly.scaled(c));
    return out;
}

bool ExpPolynomial::operator==(const ExpPolynomial& o) const {
    if (dim_ != o.dim_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (lambda_cmp(terms_[k].lambda, o.terms_[k].lambda) != 0) return false;
        if (!(terms_[k].poly == o.terms_[k].poly)) return false;
    }
    return true;
}

ExpPolynomial normalize(const ExpPolynomial& f) {
    return {f.dim(), std::vector<ExpMonomialTerm>(f.terms().begin(), f.terms().end())};
}

void AmbientSpec::validate() const {
    if (dim < 1) throw input_error("ambient: dimension must be positive");
    if (polyDegree && *polyDegree < 0) throw input_error("ambient: polyDegree must be non-negative");
    if (!polyDegree && expModules.empty()) throw input_error("ambient: no blocks given");
    for (const auto& m : expModules) {
        if (static_cast<int>(m.lambda.size()) != dim) {
            throw input_error("ambient: lambda dimension mismatch");
        }
        for (const auto& v : m.lambda) {
            if (v.is_zero()) throw input_error("ambient: lambda component is zero");
        }
        if (is_all_ones(m.lambda)) {
            throw input_error("ambient: all-ones lambda belongs to the polynomial part");
        }
        if (m.maxDegree < 0) throw input_error("ambient: maxDegree must be non-negative");
    }
    for (std::size_t a = 0; a < expModules.size(); ++a)
        for (std::size_t b = a + 1; b < expModules.size(); ++b) {
            if (lambda_cmp(expModules[a].lambda, expModules[b].lambda) == 0) {
                throw input_error("ambient: duplicate lambda vector");
            }
        }
}

} // namespace montel
