#include "montel/polynomial.hpp"

namespace montel {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

void Polynomial::add_term(const MultiIndex& alpha, const GaussianRational& c) {
    if (alpha.dim() != dim_) throw input_error("polynomial term: dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (dim_ != o.dim_) throw input_error("polynomial sum: dimension mismatch");
    Polynomial out = *this;
    for (const auto& [a, c] : o.terms_) out.add_term(a, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial out(dim_);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (dim_ != o.dim_) throw input_error("polynomial product: dimension mismatch");
    Polynomial out(dim_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            std::vector<int> e(dim_);
            for (int k = 0; k < dim_; ++k) e[k] = a.entries[k] + b.entries[k];
            out.add_term(MultiIndex(std::move(e)), ca * cb);
        }
    return out;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial out(dim_);
    if (c.is_zero()) return out;
    for (const auto& [a, v] : terms_) out.terms_.emplace(a, v * c);
    return out;
}

Polynomial Polynomial::shifted(const std::vector<GaussianRational>& h) const {
    if (static_cast<int>(h.size()) != dim_) throw input_error("shift: dimension mismatch");
    Polynomial out(dim_);
    for (const auto& [alpha, c] : terms_) {
        // (x + h)^alpha = sum_{gamma <= alpha} prod_i C(alpha_i, gamma_i) h_i^{alpha_i - gamma_i} x^gamma
        std::vector<int> gamma(dim_, 0);
        while (true) {
            GaussianRational factor = c;
            for (int k = 0; k < dim_ && !factor.is_zero(); ++k) {
                int drop = alpha.entries[k] - gamma[k];
                if (drop > 0) {
                    factor *= GaussianRational(binom(alpha.entries[k], gamma[k])) *
                              h[k].pow(drop);
                }
            }
            out.add_term(MultiIndex(gamma), factor);
            int k = dim_ - 1;
            while (k >= 0 && gamma[k] == alpha.entries[k]) {
                gamma[k] = 0;
                --k;
            }
            if (k < 0) break;
            ++gamma[k];
        }
    }
    return out;
}

GaussianRational Polynomial::evaluate(const LatticeVector& n) const {
    if (n.dim() != dim_) throw input_error("evaluate: dimension mismatch");
    std::vector<GaussianRational> x(dim_);
    for (int k = 0; k < dim_; ++k) {
        mpz_class v;
        mpz_set_si(v.get_mpz_t(), static_cast<long>(n.entries[k]));
        x[k] = GaussianRational(v);
    }
    return evaluate_at(x);
}

GaussianRational Polynomial::evaluate_at(const std::vector<GaussianRational>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw input_error("evaluate: dimension mismatch");
    GaussianRational acc = 0;
    for (const auto& [alpha, c] : terms_) {
        GaussianRational term = c;
        for (int k = 0; k < dim_; ++k) {
            if (alpha.entries[k] != 0) term *= x[k].pow(alpha.entries[k]);
        }
        acc += term;
    }
    return acc;
}

Polynomial::Degrees Polynomial::degrees() const {
    Degrees d;
    d.perVariable.assign(dim_, std::nullopt);
    for (const auto& [alpha, c] : terms_) {
        (void)c;
        int deg = alpha.degree();
        if (!d.total || *d.total < deg) d.total = deg;
        for (int k = 0; k < dim_; ++k) {
            if (!d.perVariable[k] || *d.perVariable[k] < alpha.entries[k]) {
                d.perVariable[k] = alpha.entries[k];
            }
        }
    }
    return d;
}

} // namespace montel
