#include "montel/reconstruct.hpp"

#include <stdexcept>

namespace montel {

namespace {

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// C(x_i - base, a) as a polynomial in the i-th variable: the falling factorial
// (x_i - base)(x_i - base - 1)...(x_i - base - a + 1) / a!.
Polynomial binomial_basis_factor(int dim, int var, long long base, int a) {
    Polynomial acc = Polynomial::constant(dim, GaussianRational(1));
    for (int j = 0; j < a; ++j) {
        std::vector<int> e(dim, 0);
        e[var] = 1;
        Polynomial linear = Polynomial::monomial(MultiIndex(e), GaussianRational(1));
        linear.add_term(MultiIndex(std::vector<int>(dim, 0)),
                        GaussianRational(mpz_class(static_cast<long>(-base - j))));
        acc = acc * linear;
    }
    mpq_class inv_fact(1, factorial(a));
    inv_fact.canonicalize();
    return acc.scaled(GaussianRational(inv_fact));
}

} // namespace

NewtonCoefficients newton_coefficients(const SampleTable& table, int m) {
    if (m < 1) throw input_error("newton coefficients: m must be a positive integer");
    const int d = table.dim();
    for (int k = 0; k < d; ++k) {
        if (table.upper().entries[k] - table.lower().entries[k] < m - 1) {
            throw input_error("newton coefficients: window too small for the requested order");
        }
    }

    // Values on the corner cube lower + [0, m-1]^d, then in-place forward
    // differences along each axis; afterwards T[alpha] is the mixed difference
    // at the corner.
    std::vector<int> dims(d, m);
    long long total = 1;
    for (int k = 0; k < d; ++k) total *= m;
    std::vector<GaussianRational> t(static_cast<std::size_t>(total));

    std::vector<long long> strides(d, 1);
    for (int k = d - 2; k >= 0; --k) strides[k] = strides[k + 1] * m;

    for (long long idx = 0; idx < total; ++idx) {
        LatticeVector n = table.lower();
        long long rest = idx;
        for (int k = 0; k < d; ++k) {
            n.entries[k] += rest / strides[k];
            rest %= strides[k];
        }
        t[static_cast<std::size_t>(idx)] = table.at(n);
    }

    for (int axis = 0; axis < d; ++axis) {
        for (int order = 1; order < m; ++order) {
            for (long long idx = total - 1; idx >= 0; --idx) {
                long long pos = (idx / strides[axis]) % m;
                if (pos < order) continue;
                t[static_cast<std::size_t>(idx)] -=
                    t[static_cast<std::size_t>(idx - strides[axis])];
            }
        }
    }

    NewtonCoefficients out;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> alpha(d);
        long long rest = idx;
        for (int k = 0; k < d; ++k) {
            alpha[k] = static_cast<int>(rest / strides[k]);
            rest %= strides[k];
        }
        out.emplace(MultiIndex(std::move(alpha)), t[static_cast<std::size_t>(idx)]);
    }
    return out;
}

Polynomial reconstruct_polynomial(const SampleTable& table, int m) {
    const int d = table.dim();
    NewtonCoefficients coeffs = newton_coefficients(table, m);

    std::vector<LatticeVector> unitSteps;
    for (int k = 0; k < d; ++k) {
        std::vector<long long> e(d, 0);
        e[k] = 1;
        unitSteps.emplace_back(std::move(e));
    }
    FrechetReport frechet = is_frechet_solution(FunctionValue(table), unitSteps, m);
    if (frechet.overall.has_value() && !*frechet.overall) {
        throw input_error("reconstruct: table is not a solution of Delta^m f = 0 on its window");
    }

    Polynomial p(d);
    for (const auto& [alpha, c] : coeffs) {
        if (c.is_zero()) continue;
        Polynomial basis = Polynomial::constant(d, GaussianRational(1));
        for (int k = 0; k < d; ++k) {
            if (alpha.entries[k] > 0) {
                basis = basis *
                        binomial_basis_factor(d, k, table.lower().entries[k], alpha.entries[k]);
            }
        }
        p = p + basis.scaled(c);
    }

    bool matches = true;
    table.for_each_point([&](const LatticeVector& n, const GaussianRational& v) {
        if (!(p.evaluate(n) == v)) matches = false;
    });
    if (!matches) {
        // Unreachable when the precondition holds: a Delta^m solution on a box
        // is determined by its Newton data.
        throw std::logic_error("reconstruct: rebuilt polynomial disagrees with the table");
    }
    return p;
}

SampleTable counterexample_table(int windowRadius) {
    if (windowRadius < 2) throw input_error("counterexample: window radius must be at least 2");
    const long long r = windowRadius;
    Box box{LatticeVector({-r, -r}), LatticeVector({r, r})};
    return SampleTable::tabulate(box, [](const LatticeVector& n) {
        mpz_class product = mpz_class(static_cast<long>(n.entries[0])) *
                            mpz_class(static_cast<long>(n.entries[1]));
        return GaussianRational(std::move(product));
    });
}

CounterexampleReport counterexample_case(int windowRadius, int maxOrder) {
    if (windowRadius < 2) throw input_error("counterexample: window radius must be at least 2");
    if (maxOrder < 2) throw input_error("counterexample: max order must be at least 2");
    if (maxOrder > 2 * windowRadius) {
        throw input_error("counterexample: window too small for the requested max order");
    }

    CounterexampleReport report;
    report.radius = windowRadius;
    report.maxOrder = maxOrder;

    const SampleTable table = counterexample_table(windowRadius);
    const LatticeVector u1({1, 0}), u2({0, 1});

    report.allPureVanish = true;
    for (int axis = 1; axis <= 2; ++axis) {
        const LatticeVector& u = axis == 1 ? u1 : u2;
        for (int order = 2; order <= maxOrder; ++order) {
            SampleTable diff = delta_power(u, order, table);
            bool zero = diff.all_zero();
            report.pure.push_back({axis, order, zero, diff.box()});
            if (!zero) report.allPureVanish = false;
        }
    }

    SampleTable mixed = delta(u1, delta(u2, table));
    report.mixedWindow = mixed.box();
    report.mixedConstantOne = true;
    for (const auto& v : mixed.values()) {
        if (!(v == GaussianRational(1))) report.mixedConstantOne = false;
    }
    report.mixedValueAtOrigin = mixed.at(LatticeVector({0, 0}));

    return report;
}

} // namespace montel
