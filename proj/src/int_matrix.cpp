#include "montel/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace montel {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

Bezout extended_gcd(const mpz_class& a, const mpz_class& b) {
    if (a == 0 && b == 0) throw input_error("extended_gcd: both arguments are zero");
    mpz_class old_r = a, r = b;
    mpz_class old_x = 1, x = 0;
    mpz_class old_y = 0, y = 1;
    while (r != 0) {
        mpz_class q = old_r / r; // truncating division
        mpz_class t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] += f * row[b]
void add_row(IntMatrix& m, int a, int b, const mpz_class& f) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) += f * m.at(b, j);
}
void add_col(IntMatrix& m, int a, int b, const mpz_class& f) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) += f * m.at(i, b);
}
void negate_row(IntMatrix& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

// True when only s(t,t) is nonzero in row t and column t beyond position t.
bool pivot_isolated(const IntMatrix& s, int t) {
    for (int i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) return false;
    for (int j = t + 1; j < s.cols(); ++j)
        if (s.at(t, j) != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the trailing submatrix, scanning row-major so
// ties resolve deterministically. Returns false when the submatrix is zero.
bool locate_pivot(const IntMatrix& s, int t, int& pr, int& pc) {
    bool found = false;
    mpz_class best;
    for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j) {
            if (s.at(i, j) == 0) continue;
            mpz_class a = abs(s.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const int nmin = std::min(rows, cols);

    for (int t = 0; t < nmin; ++t) {
        int pr = 0, pc = 0;
        if (!locate_pivot(s, t, pr, pc)) break; // trailing block is zero
        swap_rows(s, t, pr);
        swap_rows(u, t, pr);
        swap_cols(s, t, pc);
        swap_cols(v, t, pc);

        while (!pivot_isolated(s, t)) {
            for (int i = t + 1; i < rows; ++i) {
                if (s.at(i, t) == 0) continue;
                mpz_class q = s.at(i, t) / s.at(t, t);
                add_row(s, i, t, -q);
                add_row(u, i, t, -q);
                if (s.at(i, t) != 0) { // remainder smaller than pivot: promote it
                    swap_rows(s, t, i);
                    swap_rows(u, t, i);
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s.at(t, j) == 0) continue;
                mpz_class q = s.at(t, j) / s.at(t, t);
                add_col(s, j, t, -q);
                add_col(v, j, t, -q);
                if (s.at(t, j) != 0) {
                    swap_cols(s, t, j);
                    swap_cols(v, t, j);
                }
            }
        }

        // Enforce the divisibility chain: fold any non-multiple into row t and
        // keep reducing.
        bool restart = true;
        while (restart) {
            restart = false;
            for (int i = t + 1; i < rows && !restart; ++i)
                for (int j = t + 1; j < cols && !restart; ++j) {
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        add_row(s, t, i, 1);
                        add_row(u, t, i, 1);
                        while (!pivot_isolated(s, t)) {
                            for (int r2 = t + 1; r2 < rows; ++r2) {
                                if (s.at(r2, t) == 0) continue;
                                mpz_class q = s.at(r2, t) / s.at(t, t);
                                add_row(s, r2, t, -q);
                                add_row(u, r2, t, -q);
                                if (s.at(r2, t) != 0) {
                                    swap_rows(s, t, r2);
                                    swap_rows(u, t, r2);
                                }
                            }
                            for (int c2 = t + 1; c2 < cols; ++c2) {
                                if (s.at(t, c2) == 0) continue;
                                mpz_class q = s.at(t, c2) / s.at(t, t);
                                add_col(s, c2, t, -q);
                                add_col(v, c2, t, -q);
                                if (s.at(t, c2) != 0) {
                                    swap_cols(s, t, c2);
                                    swap_cols(v, t, c2);
                                }
                            }
                        }
                        restart = true;
                    }
                }
        }

        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }

    SmithResult out{std::move(u), std::move(s), std::move(v), {}};
    for (int t = 0; t < nmin; ++t) {
        if (out.s.at(t, t) != 0) out.invariantFactors.push_back(out.s.at(t, t));
    }

    // Verify the factorization before handing it out.
    if (!(out.u * m * out.v == out.s)) throw std::logic_error("smith: S != U M V");
    mpz_class du = determinant(out.u), dv = determinant(out.v);
    if (abs(du) != 1 || abs(dv) != 1) throw std::logic_error("smith: transform not unimodular");
    for (std::size_t k = 1; k < out.invariantFactors.size(); ++k) {
        if (out.invariantFactors[k] % out.invariantFactors[k - 1] != 0) {
            throw std::logic_error("smith: divisibility chain broken");
        }
    }
    return out;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant: matrix not square");
    if (m.rows() == 0) return 1;
    IntMatrix w = m;
    const int n = w.rows();
    mpz_class prev = 1;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n; ++r) {
            if (w.at(r, col) != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) return 0;
        if (p != col) {
            swap_rows(w, col, p);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r) {
            for (int j = col + 1; j < n; ++j) {
                mpz_class num = w.at(col, col) * w.at(r, j) - w.at(r, col) * w.at(col, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                w.at(r, j) = q;
            }
            w.at(r, col) = 0;
        }
        prev = w.at(col, col);
    }
    return sign < 0 ? mpz_class(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

IntMatrix steps_matrix(const std::vector<LatticeVector>& steps) {
    if (steps.empty()) throw input_error("step list must be non-empty");
    const int d = steps.front().dim();
    if (d < 1) throw input_error("steps must have positive dimension");
    for (const auto& h : steps) {
        if (h.dim() != d) throw input_error("steps have mismatched dimensions");
    }
    IntMatrix m(static_cast<int>(steps.size()), d);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = static_cast<long>(steps[i].entries[j]);
    return m;
}

bool generates_lattice(const std::vector<LatticeVector>& steps) {
    IntMatrix m = steps_matrix(steps);
    const int d = m.cols();
    SmithResult snf = smith_normal_form(m);
    if (static_cast<int>(snf.invariantFactors.size()) != d) return false;
    for (const auto& f : snf.invariantFactors) {
        if (f != 1) return false;
    }
    return true;
}

} // namespace montel
