#pragma once

#include <gmpxx.h>

#include <vector>

#include "montel/errors.hpp"
#include "montel/multi_index.hpp"

namespace montel {

/// Dense matrix over the integers (arbitrary precision); carrier for the
/// lattice-generation decision procedure.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int k = 0; k < n; ++k) m.at(k, k) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpz_class& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

/// Extended Euclid: returns (g, x, y) with g = gcd(a,b) > 0 and g = a x + b y.
/// Throws input_error when both arguments are zero.
struct Bezout {
    mpz_class g, x, y;
};
Bezout extended_gcd(const mpz_class& a, const mpz_class& b);

/// Smith normal form S = U M V with U, V unimodular and S diagonal with the
/// divisibility chain d1 | d2 | ... . The factorization and |det U| = |det V| = 1
/// are re-verified before returning.
struct SmithResult {
    IntMatrix u, s, v;
    std::vector<mpz_class> invariantFactors; // nonzero diagonal entries of S
};
SmithResult smith_normal_form(const IntMatrix& m);

mpz_class determinant(const IntMatrix& m);

/// True iff h_1 Z + ... + h_t Z = Z^d, decided by the Smith normal form of the
/// matrix whose rows are the steps: all d invariant factors must exist and be 1.
bool generates_lattice(const std::vector<LatticeVector>& steps);

/// Rows = the given steps (validated to share one dimension).
IntMatrix steps_matrix(const std::vector<LatticeVector>& steps);

} // namespace montel
