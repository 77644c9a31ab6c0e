#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "montel/errors.hpp"

namespace montel {

/// Exact complex scalar a + b*i with rational a, b — the coefficient field of
/// the whole library. Components are always kept in lowest terms with a
/// positive denominator (mpq canonical form), so equality is structural.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {} // NOLINT: implicit by design
    GaussianRational(mpz_class v) : re_(std::move(v)), im_(0) {}
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) { canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    GaussianRational conjugate() const { return {re_, mpq_class(-im_)}; }

    /// |z|^2 = a^2 + b^2, still rational.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const;

    /// z^e for any integer e; negative exponents go through inverse().
    GaussianRational pow(long long e) const;

    /// Canonical text form: "0", "3", "-1/2", "i", "2-3/4i", ...
    std::string str() const;

    /// Parses the canonical form plus obvious variants ("1/2i", "+3", "-i").
    /// Throws input_error on anything else.
    static GaussianRational parse(const std::string& text);

    /// Lexicographic comparison on (re, im); a total order used only for
    /// canonical sorting, not a field order. Returns <0, 0, >0.
    static int lex_cmp(const GaussianRational& a, const GaussianRational& b) {
        if (int c = cmp(a.re_, b.re_); c != 0) return c;
        return cmp(a.im_, b.im_);
    }

private:
    // Components are kept in mpq canonical form (lowest terms, positive
    // denominator); arithmetic preserves it, raw construction establishes it.
    void canonicalize() {
        if (re_.get_den() == 0 || im_.get_den() == 0) {
            throw input_error("zero denominator in rational");
        }
        re_.canonicalize();
        im_.canonicalize();
    }

    mpq_class re_, im_;
};

/// Product of componentwise powers: lambda^h = prod_i lambda_i^{h_i}.
/// Every lambda_i must be nonzero when the matching exponent is negative.
GaussianRational vector_power(const std::vector<GaussianRational>& lambda,
                              const std::vector<long long>& exponents);

} // namespace montel
