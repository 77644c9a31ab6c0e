#pragma once

#include <string>

#include "montel/operator_module.hpp"

namespace montel {

/// Exact solution basis of the system Delta_{h_j}^m f = 0 inside a finite
/// ambient P + E_1 + ... + E_s, together with the certified flags tied to the
/// lattice-generation hypothesis.
struct MontelSolution {
    AmbientSpec ambient;
    std::vector<ExpPolynomial> basis;        // normalized, linearly independent
    bool generatesLattice = false;
    bool allPolynomial = false;              // no solution carries a lambda != all-ones
    std::optional<bool> d1DegreeOk;          // d = 1 and generating steps only
    std::optional<int> maxTotalDegree;       // observed over all solutions
    std::vector<std::string> warnings;
};

/// Builds the block matrices of Delta_{h_j}^m (blocks never mix), stacks all
/// steps, and returns the exact nullspace mapped back to exponential
/// polynomials. Deterministic: blocks in ambient order, vectors in nullspace
/// order.
MontelSolution solve_montel_system(const std::vector<LatticeVector>& steps, int m,
                                   const AmbientSpec& ambient);

} // namespace montel
