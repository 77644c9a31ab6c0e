#include "montel/difference.hpp"

#include <algorithm>

namespace montel {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

std::vector<GaussianRational> to_scalar_vector(const LatticeVector& h) {
    std::vector<GaussianRational> out(h.dim());
    for (int k = 0; k < h.dim(); ++k) {
        out[k] = GaussianRational(mpz_class(static_cast<long>(h.entries[k])));
    }
    return out;
}

std::vector<GaussianRational> scale_step(const std::vector<GaussianRational>& h, long k) {
    std::vector<GaussianRational> out(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) out[j] = h[j] * GaussianRational(k);
    return out;
}

void require_real(const std::vector<GaussianRational>& h) {
    for (const auto& v : h) {
        if (!v.is_real()) throw input_error("step components must be real rationals");
    }
}

void require_positive_order(int m) {
    if (m < 1) throw input_error("difference order must be a positive integer");
}

LatticeVector scaled_lattice(const LatticeVector& h, long long k) {
    LatticeVector out = h;
    for (auto& v : out.entries) v *= k;
    return out;
}

LatticeVector translated(const LatticeVector& n, const LatticeVector& h) {
    LatticeVector out = n;
    for (int j = 0; j < n.dim(); ++j) out.entries[j] += h.entries[j];
    return out;
}

} // namespace

int function_dim(const FunctionValue& f) {
    return std::visit([](const auto& g) { return g.dim(); }, f);
}

Box shrunken_box(const Box& box, const LatticeVector& h, int m) {
    if (box.dim() != h.dim()) throw input_error("difference: dimension mismatch");
    Box out = box;
    for (int k = 0; k < box.dim(); ++k) {
        long long reach = h.entries[k] * m;
        if (reach >= 0) {
            out.upper.entries[k] = box.upper.entries[k] - reach;
        } else {
            out.lower.entries[k] = box.lower.entries[k] - reach;
        }
    }
    return out;
}

Polynomial delta_rational(const std::vector<GaussianRational>& h, const Polynomial& f) {
    if (static_cast<int>(h.size()) != f.dim()) throw input_error("difference: dimension mismatch");
    require_real(h);
    return f.shifted(h) - f;
}

Polynomial delta_power_rational(const std::vector<GaussianRational>& h, int m,
                                const Polynomial& f) {
    if (static_cast<int>(h.size()) != f.dim()) throw input_error("difference: dimension mismatch");
    require_real(h);
    require_positive_order(m);
    Polynomial acc(f.dim());
    for (long k = 0; k <= m; ++k) {
        GaussianRational c = GaussianRational(binom(m, k));
        if ((m - k) % 2 != 0) c = -c;
        acc = acc + f.shifted(scale_step(h, k)).scaled(c);
    }
    return acc;
}

Polynomial delta(const LatticeVector& h, const Polynomial& f) {
    return delta_rational(to_scalar_vector(h), f);
}

ExpPolynomial delta(const LatticeVector& h, const ExpPolynomial& f) {
    if (h.dim() != f.dim()) throw input_error("difference: dimension mismatch");
    std::vector<ExpMonomialTerm> out;
    const auto hv = to_scalar_vector(h);
    for (const auto& t : f.terms()) {
        // Delta_h (p(n) lambda^n) = (p(n+h) lambda^h - p(n)) lambda^n
        GaussianRational lh = vector_power(t.lambda, h.entries);
        Polynomial q = t.poly.shifted(hv).scaled(lh) - t.poly;
        if (!q.is_zero()) out.emplace_back(t.lambda, std::move(q));
    }
    return {f.dim(), std::move(out)};
}

SampleTable delta(const LatticeVector& h, const SampleTable& f) {
    return delta_power(h, 1, f);
}

Polynomial delta_power(const LatticeVector& h, int m, const Polynomial& f) {
    return delta_power_rational(to_scalar_vector(h), m, f);
}

ExpPolynomial delta_power(const LatticeVector& h, int m, const ExpPolynomial& f) {
    if (h.dim() != f.dim()) throw input_error("difference: dimension mismatch");
    require_positive_order(m);
    std::vector<ExpMonomialTerm> out;
    const auto hv = to_scalar_vector(h);
    for (const auto& t : f.terms()) {
        Polynomial acc(f.dim());
        for (long k = 0; k <= m; ++k) {
            GaussianRational c =
                GaussianRational(binom(m, k)) * vector_power(t.lambda, scaled_lattice(h, k).entries);
            if ((m - k) % 2 != 0) c = -c;
            acc = acc + t.poly.shifted(scale_step(hv, k)).scaled(c);
        }
        if (!acc.is_zero()) out.emplace_back(t.lambda, std::move(acc));
    }
    return {f.dim(), std::move(out)};
}

SampleTable delta_power(const LatticeVector& h, int m, const SampleTable& f) {
    if (h.dim() != f.dim()) throw input_error("difference: dimension mismatch");
    require_positive_order(m);
    Box target = shrunken_box(f.box(), h, m);
    if (target.empty()) throw input_error("difference: result window is empty");
    std::vector<mpz_class> coef(m + 1);
    for (int k = 0; k <= m; ++k) {
        coef[k] = binom(m, k);
        if ((m - k) % 2 != 0) coef[k] = -coef[k];
    }
    return SampleTable::tabulate(target, [&](const LatticeVector& n) {
        GaussianRational acc = 0;
        for (int k = 0; k <= m; ++k) {
            acc += GaussianRational(coef[k]) * f.at(translated(n, scaled_lattice(h, k)));
        }
        return acc;
    });
}

FunctionValue delta(const LatticeVector& h, const FunctionValue& f) {
    return std::visit([&](const auto& g) -> FunctionValue { return delta(h, g); }, f);
}

FunctionValue delta_power(const LatticeVector& h, int m, const FunctionValue& f) {
    return std::visit([&](const auto& g) -> FunctionValue { return delta_power(h, m, g); }, f);
}

namespace {

template <class F>
F delta_mixed_impl(const std::vector<LatticeVector>& steps, const F& f) {
    if (steps.empty()) throw input_error("mixed difference: empty step list");
    F acc = f;
    // Composition per the recursive definition: the last listed step acts first.
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) acc = delta(*it, acc);
    return acc;
}

} // namespace

Polynomial delta_mixed(const std::vector<LatticeVector>& steps, const Polynomial& f) {
    return delta_mixed_impl(steps, f);
}
ExpPolynomial delta_mixed(const std::vector<LatticeVector>& steps, const ExpPolynomial& f) {
    return delta_mixed_impl(steps, f);
}
SampleTable delta_mixed(const std::vector<LatticeVector>& steps, const SampleTable& f) {
    return delta_mixed_impl(steps, f);
}
FunctionValue delta_mixed(const std::vector<LatticeVector>& steps, const FunctionValue& f) {
    return std::visit([&](const auto& g) -> FunctionValue { return delta_mixed(steps, g); }, f);
}

DjokovicResult djokovic_check(const std::vector<std::vector<GaussianRational>>& steps,
                              const Polynomial& p) {
    if (steps.empty()) throw input_error("djokovic: empty step list");
    const int s = static_cast<int>(steps.size());
    const int d = p.dim();
    for (const auto& h : steps) {
        if (static_cast<int>(h.size()) != d) throw input_error("djokovic: dimension mismatch");
        require_real(h);
    }

    Polynomial lhs = p;
    for (int r = s - 1; r >= 0; --r) lhs = delta_rational(steps[r], lhs);

    Polynomial rhs(d);
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<GaussianRational> alpha(d, GaussianRational(0));
        std::vector<GaussianRational> beta(d, GaussianRational(0));
        int bits = 0;
        for (int r = 0; r < s; ++r) {
            if (!(mask & (1u << r))) continue;
            ++bits;
            // alpha -= h_r / r, beta += h_r (r is 1-based in the formula)
            GaussianRational inv_r = GaussianRational(1) / GaussianRational(r + 1);
            for (int j = 0; j < d; ++j) {
                alpha[j] -= steps[r][j] * inv_r;
                beta[j] += steps[r][j];
            }
        }
        Polynomial term = delta_power_rational(alpha, s, p).shifted(beta);
        rhs = (bits % 2 == 0) ? rhs + term : rhs - term;
    }

    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

FrechetReport is_frechet_solution(const FunctionValue& f, const std::vector<LatticeVector>& steps,
                                  int m) {
    if (steps.empty()) throw input_error("frechet check: empty step list");
    require_positive_order(m);
    const int d = function_dim(f);
    FrechetReport report;
    bool anyFail = false, anyTooSmall = false;

    for (const auto& h : steps) {
        if (h.dim() != d) throw input_error("frechet check: dimension mismatch");
        StepVerdict verdict{h, StepStatus::holds, std::nullopt, std::nullopt, std::nullopt};

        if (const auto* table = std::get_if<SampleTable>(&f)) {
            Box window = shrunken_box(table->box(), h, m);
            if (window.empty()) {
                verdict.status = StepStatus::window_too_small;
                anyTooSmall = true;
            } else {
                SampleTable residual = delta_power(h, m, *table);
                verdict.window = residual.box();
                if (!residual.all_zero()) {
                    verdict.status = StepStatus::fails;
                    anyFail = true;
                    residual.for_each_point([&](const LatticeVector& n, const GaussianRational& v) {
                        if (!verdict.counterpoint && !v.is_zero()) {
                            verdict.counterpoint = std::make_pair(n, v);
                        }
                    });
                }
            }
        } else {
            FunctionValue residual = delta_power(h, m, f);
            bool zero = std::visit(
                [](const auto& g) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(g)>, SampleTable>) {
                        return g.all_zero();
                    } else {
                        return g.is_zero();
                    }
                },
                residual);
            if (!zero) {
                verdict.status = StepStatus::fails;
                verdict.residual = std::move(residual);
                anyFail = true;
            }
        }
        report.perStep.push_back(std::move(verdict));
    }

    if (anyFail) {
        report.overall = false;
    } else if (anyTooSmall) {
        report.overall = std::nullopt;
    } else {
        report.overall = true;
    }
    return report;
}

} // namespace montel
