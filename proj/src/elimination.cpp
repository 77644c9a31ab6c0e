#include "montel/elimination.hpp"

#include <stdexcept>
#include <utility>

namespace montel {

namespace {

void swap_rows(ExactMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

} // namespace

Echelon bareiss_echelon(ExactMatrix m) {
    std::vector<int> pivots;
    const int rows = m.rows(), cols = m.cols();
    int row = 0;
    GaussianRational prev = 1;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        swap_rows(m, row, p);
        const GaussianRational pivot = m.at(row, col);
        for (int r = row + 1; r < rows; ++r) {
            const GaussianRational head = m.at(r, col);
            for (int j = col + 1; j < cols; ++j) {
                // One-step Bareiss update; the division by the previous pivot
                // is exact (two-by-two minor identity).
                m.at(r, j) = (pivot * m.at(r, j) - head * m.at(row, j)) / prev;
            }
            m.at(r, col) = 0;
        }
        pivots.push_back(col);
        prev = pivot;
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

int rank(const ExactMatrix& m) { return bareiss_echelon(m).rank(); }

Echelon rref(ExactMatrix m) {
    Echelon e = bareiss_echelon(std::move(m));
    const int r = e.rank();
    for (int k = 0; k < r; ++k) {
        const GaussianRational inv = e.mat.at(k, e.pivotCols[k]).inverse();
        for (int j = e.pivotCols[k]; j < e.mat.cols(); ++j) e.mat.at(k, j) *= inv;
    }
    for (int k = r - 1; k >= 0; --k) {
        const int pc = e.pivotCols[k];
        for (int i = 0; i < k; ++i) {
            const GaussianRational f = e.mat.at(i, pc);
            if (f.is_zero()) continue;
            for (int j = pc; j < e.mat.cols(); ++j) e.mat.at(i, j) -= f * e.mat.at(k, j);
        }
    }
    return e;
}

std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix& m) {
    Echelon e = bareiss_echelon(m);
    const int cols = m.cols();
    const int r = e.rank();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivotCols) is_pivot[c] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<GaussianRational> v(cols);
        v[f] = 1;
        for (int k = r - 1; k >= 0; --k) {
            const int pc = e.pivotCols[k];
            GaussianRational s = 0;
            for (int j = pc + 1; j < cols; ++j) {
                if (!e.mat.at(k, j).is_zero() && !v[j].is_zero()) s += e.mat.at(k, j) * v[j];
            }
            if (!s.is_zero()) v[pc] = -s / e.mat.at(k, pc);
        }
        basis.push_back(std::move(v));
    }

    // Contract checks: rank + nullity = cols, and M v = 0 for every vector.
    if (static_cast<int>(basis.size()) + r != cols) {
        throw std::logic_error("nullspace: rank-nullity violation");
    }
    for (const auto& v : basis) {
        for (const auto& entry : m.apply(v)) {
            if (!entry.is_zero()) throw std::logic_error("nullspace: residual is nonzero");
        }
    }
    return basis;
}

GaussianRational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant: matrix not square");
    if (m.rows() == 0) return 1;
    ExactMatrix w = m;
    const int n = w.rows();
    GaussianRational prev = 1;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n; ++r) {
            if (!w.at(r, col).is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) return 0;
        if (p != col) {
            swap_rows(w, col, p);
            sign = -sign;
        }
        const GaussianRational pivot = w.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const GaussianRational head = w.at(r, col);
            for (int j = col + 1; j < n; ++j) {
                w.at(r, j) = (pivot * w.at(r, j) - head * w.at(col, j)) / prev;
            }
            w.at(r, col) = 0;
        }
        prev = pivot;
    }
    // After full Bareiss elimination the last pivot is the determinant.
    GaussianRational det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace montel
