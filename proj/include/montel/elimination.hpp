#pragma once

#include <vector>

#include "montel/exact_matrix.hpp"

namespace montel {

/// Row echelon data produced by fraction-free elimination.
struct Echelon {
    ExactMatrix mat;
    std::vector<int> pivotCols; // ascending; pivot of row k sits in pivotCols[k]
    int rank() const { return static_cast<int>(pivotCols.size()); }
};

/// Bareiss-style fraction-free forward elimination. Pivoting is deterministic:
/// columns are processed left to right and the pivot is the first (lowest
/// index) remaining row with a nonzero entry, so results are reproducible
/// bit for bit. Every intermediate value is exact.
Echelon bareiss_echelon(ExactMatrix m);

int rank(const ExactMatrix& m);

/// Reduced row echelon form: pivots normalized to 1, zeros above and below.
/// Canonical for a given row space, so two spans are equal iff their RREFs are.
Echelon rref(ExactMatrix m);

/// Basis of { v : M v = 0 }. One vector per free column, in ascending column
/// order; each satisfies M v = 0 exactly, and the count equals
/// cols - rank(M) (both verified internally before returning).
std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix& m);

/// Determinant of a square matrix (0 when singular).
GaussianRational determinant(const ExactMatrix& m);

} // namespace montel
