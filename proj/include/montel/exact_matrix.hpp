#pragma once

#include <vector>

#include "montel/scalar.hpp"

namespace montel {

/// Dense matrix over the Gaussian rationals. Dimensions here stay small
/// (hundreds at most), so dense row-major storage is fine.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int k = 0; k < n; ++k) m.at(k, k) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const GaussianRational& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;

    /// m-th power of a square matrix; pow(0) is the identity.
    ExactMatrix pow(int m) const;

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    /// Rows of `top` followed by rows of `bottom` (equal column counts).
    static ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

    bool operator==(const ExactMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> a_;
};

} // namespace montel
