#include "montel/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace montel {

namespace {

bool is_decimal_integer(const std::string& t) {
    std::size_t pos = 0;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
    if (pos >= t.size()) return false;
    for (; pos < t.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(t[pos]))) return false;
    }
    return true;
}

mpq_class parse_rational(const std::string& raw) {
    std::string t = raw;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    auto slash = t.find('/');
    std::string num = (slash == std::string::npos) ? t : t.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : t.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
        throw input_error("malformed rational: '" + raw + "'");
    }
    mpz_class n(num), d(den);
    if (d == 0) throw input_error("zero denominator in rational: '" + raw + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

// Imaginary component text without the trailing 'i'. "" and "+" mean 1, "-" means -1.
mpq_class parse_imag_coefficient(const std::string& t) {
    if (t.empty() || t == "+") return {1};
    if (t == "-") return {-1};
    return parse_rational(t);
}

std::string imag_magnitude_str(const mpq_class& mag) {
    if (mag == 1) return "i";
    return mag.get_str() + "i";
}

} // namespace

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class n = norm2();
    return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational GaussianRational::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational base = *this;
    GaussianRational acc = 1;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    mpq_class mag = abs(im_);
    std::string imag = imag_magnitude_str(mag);
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(const std::string& text) {
    if (text.empty()) throw input_error("empty scalar");
    // Split at the first sign that is not the leading one; rationals contain
    // signs only in front, so this is the boundary between the two parts.
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < text.size(); ++k) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    bool ends_i = text.back() == 'i';
    if (split == std::string::npos) {
        if (!ends_i) return {parse_rational(text)};
        return {mpq_class(0), parse_imag_coefficient(text.substr(0, text.size() - 1))};
    }
    if (!ends_i) throw input_error("malformed scalar: '" + text + "'");
    std::string re_text = text.substr(0, split);
    std::string im_text = text.substr(split, text.size() - split - 1);
    return {parse_rational(re_text), parse_imag_coefficient(im_text)};
}

GaussianRational vector_power(const std::vector<GaussianRational>& lambda,
                              const std::vector<long long>& exponents) {
    if (lambda.size() != exponents.size()) throw input_error("vector_power: dimension mismatch");
    GaussianRational acc = 1;
    for (std::size_t k = 0; k < lambda.size(); ++k) acc *= lambda[k].pow(exponents[k]);
    return acc;
}

} // namespace montel
