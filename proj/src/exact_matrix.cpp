#include "montel/exact_matrix.hpp"

namespace montel {

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product: dimension mismatch");
    ExactMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix difference: shape mismatch");
    ExactMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
    return out;
}

ExactMatrix ExactMatrix::pow(int m) const {
    if (rows_ != cols_) throw input_error("matrix power: matrix not square");
    if (m < 0) throw input_error("matrix power: negative exponent");
    ExactMatrix acc = identity(rows_);
    for (int k = 0; k < m; ++k) acc = acc * *this;
    return acc;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw input_error("matrix apply: dimension mismatch");
    std::vector<GaussianRational> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        GaussianRational s = 0;
        for (int j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw input_error("vstack: column count mismatch");
    ExactMatrix out(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

} // namespace montel
