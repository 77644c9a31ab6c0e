#pragma once

#include <map>

#include "montel/difference.hpp"

namespace montel {

using NewtonCoefficients = std::map<MultiIndex, GaussianRational, GrlexLess>;

/// Mixed forward differences at the window's lower corner:
/// c_alpha = (Delta_{e_1}^{alpha_1} ... Delta_{e_d}^{alpha_d} f)(lower) for all
/// alpha with every alpha_i <= m-1. These are the coefficients of f in the
/// shifted binomial basis prod_i C(n_i - lower_i, alpha_i).
/// Requires the box to contain lower + [0, m-1]^d.
NewtonCoefficients newton_coefficients(const SampleTable& table, int m);

/// Rebuilds the polynomial from its lattice samples by expanding the binomial
/// basis into monomials. Preconditions: window large enough, and the table
/// must not falsify Delta_{e_i}^m f = 0 on its window. The result is verified
/// to match every table value before returning.
Polynomial reconstruct_polynomial(const SampleTable& table, int m);

/// The measurable-case counterexample f(p,q) = p*q in lattice coordinates:
/// every pure power Delta_{u_i}^n f (2 <= n <= maxOrder) vanishes on the
/// window, yet the mixed difference Delta_{u_1} Delta_{u_2} f is identically 1,
/// so f solves both single-step equations without being a polynomial.
struct CounterexampleReport {
    int radius = 0;
    int maxOrder = 0;

    struct PureCheck {
        int axis;  // 1 or 2
        int order;
        bool zero;
        Box window;
    };
    std::vector<PureCheck> pure;

    Box mixedWindow;
    bool mixedConstantOne = false;
    GaussianRational mixedValueAtOrigin;

    bool allPureVanish = false;
    bool certified() const { return allPureVanish && mixedConstantOne; }
};

CounterexampleReport counterexample_case(int windowRadius, int maxOrder);

/// The counterexample table itself: f(p,q) = p*q on [-radius, radius]^2.
SampleTable counterexample_table(int windowRadius);

} // namespace montel
