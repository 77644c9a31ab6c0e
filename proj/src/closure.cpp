#include "montel/closure.hpp"

#include <stdexcept>

namespace montel {

SubspaceBasis::SubspaceBasis(int ambientDim,
                             const std::vector<std::vector<GaussianRational>>& vectors)
    : ambientDim_(ambientDim) {
    if (ambientDim < 1) throw input_error("subspace: ambient dimension must be positive");
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambientDim) {
            throw input_error("subspace: vector dimension mismatch");
        }
    }
    if (vectors.empty()) return;
    ExactMatrix m(static_cast<int>(vectors.size()), ambientDim);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < ambientDim; ++j) m.at(i, j) = vectors[i][j];
    Echelon e = rref(std::move(m));
    for (int i = 0; i < e.rank(); ++i) {
        std::vector<GaussianRational> row(ambientDim);
        for (int j = 0; j < ambientDim; ++j) row[j] = e.mat.at(i, j);
        rows_.push_back(std::move(row));
    }
}

SubspaceBasis SubspaceBasis::full(int ambientDim) {
    std::vector<std::vector<GaussianRational>> rows(ambientDim);
    for (int i = 0; i < ambientDim; ++i) {
        rows[i].assign(ambientDim, GaussianRational(0));
        rows[i][i] = 1;
    }
    return {ambientDim, rows};
}

bool SubspaceBasis::contains(const std::vector<GaussianRational>& v) const {
    if (static_cast<int>(v.size()) != ambientDim_) {
        throw input_error("subspace: vector dimension mismatch");
    }
    // Reduce against the RREF rows; member iff the residual vanishes.
    std::vector<GaussianRational> r = v;
    for (const auto& row : rows_) {
        int pivot = -1;
        for (int j = 0; j < ambientDim_; ++j) {
            if (!row[j].is_zero()) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0 || r[pivot].is_zero()) continue;
        const GaussianRational f = r[pivot];
        for (int j = 0; j < ambientDim_; ++j) r[j] -= f * row[j];
    }
    for (const auto& x : r) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool SubspaceBasis::containsSubspace(const SubspaceBasis& other) const {
    if (other.ambientDim_ != ambientDim_) throw input_error("subspace: ambient mismatch");
    for (const auto& v : other.rows_) {
        if (!contains(v)) return false;
    }
    return true;
}

SubspaceBasis SubspaceBasis::spanWith(
    const std::vector<std::vector<GaussianRational>>& extra) const {
    std::vector<std::vector<GaussianRational>> all = rows_;
    all.insert(all.end(), extra.begin(), extra.end());
    return {ambientDim_, all};
}

namespace {

void require_operator(const ExactMatrix& l, const SubspaceBasis& v) {
    if (l.rows() != l.cols()) throw input_error("closure: operator must be square");
    if (l.rows() != v.ambientDim()) throw input_error("closure: operator/ambient size mismatch");
}

bool commute(const ExactMatrix& a, const ExactMatrix& b) { return a * b == b * a; }

} // namespace

SubspaceBasis box_closure(const ExactMatrix& l, const SubspaceBasis& v, int m) {
    require_operator(l, v);
    if (m < 1) throw input_error("closure: m must be a positive integer");

    std::vector<std::vector<GaussianRational>> generators = v.rows();
    std::vector<std::vector<GaussianRational>> power = v.rows(); // L^k applied to V's basis
    bool powerInV = true;
    for (int k = 1; k <= m; ++k) {
        for (auto& w : power) w = l.apply(w);
        generators.insert(generators.end(), power.begin(), power.end());
        if (k == m) {
            for (const auto& w : power) powerInV = powerInV && v.contains(w);
        }
    }
    SubspaceBasis result(v.ambientDim(), generators);
    if (powerInV && !is_invariant(l, result)) {
        throw std::logic_error("box closure: result not invariant despite L^m(V) in V");
    }
    return result;
}

SubspaceBasis diamond_closure(const std::vector<ExactMatrix>& ls, const SubspaceBasis& v, int m) {
    if (ls.empty()) throw input_error("closure: operator list must be non-empty");
    if (m < 1) throw input_error("closure: m must be a positive integer");
    for (const auto& l : ls) require_operator(l, v);
    for (std::size_t a = 0; a < ls.size(); ++a)
        for (std::size_t b = a + 1; b < ls.size(); ++b) {
            if (!commute(ls[a], ls[b])) {
                throw input_error("closure: operators do not commute");
            }
        }
    for (const auto& l : ls) {
        const ExactMatrix lm = l.pow(m);
        for (const auto& w : v.rows()) {
            if (!v.contains(lm.apply(w))) {
                throw input_error("closure: L^m(V) is not contained in V");
            }
        }
    }

    SubspaceBasis acc = v;
    for (const auto& l : ls) acc = box_closure(l, acc, m);

    if (!acc.containsSubspace(v)) throw std::logic_error("diamond closure: input not contained");
    for (const auto& l : ls) {
        if (!is_invariant(l, acc)) throw std::logic_error("diamond closure: result not invariant");
    }
    return acc;
}

bool is_invariant(const ExactMatrix& l, const SubspaceBasis& w) {
    require_operator(l, w);
    for (const auto& v : w.rows()) {
        if (!w.contains(l.apply(v))) return false;
    }
    return true;
}

bool ChainReport::ok() const {
    if (!chainInvariantUnderA || !chainInvariantUnderPower) return false;
    if (powerShapeOk && !*powerShapeOk) return false;
    if (superdiagMatchesFormula && !*superdiagMatchesFormula) return false;
    if (powerIsZero && !*powerIsZero) return false;
    return true;
}

ChainReport chain_check(const ExactMatrix& a, int m) {
    if (a.rows() != a.cols()) throw input_error("chain check: matrix must be square");
    const int n = a.rows();
    if (n < 2) throw input_error("chain check: matrix must be at least 2x2");
    if (m < 1) throw input_error("chain check: m must be a positive integer");

    ChainReport report;
    report.size = n;
    report.m = m;
    report.lambda = a.at(0, 0);

    // Required shape: constant diagonal, zero below it, nowhere-zero first
    // superdiagonal.
    for (int i = 0; i < n; ++i) {
        if (!(a.at(i, i) == report.lambda)) {
            throw input_error("chain check: diagonal is not constant");
        }
        for (int j = 0; j < i; ++j) {
            if (!a.at(i, j).is_zero()) {
                throw input_error("chain check: matrix is not upper triangular");
            }
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (a.at(i, i + 1).is_zero()) {
            throw input_error("chain check: zero entry on the first superdiagonal");
        }
    }

    report.lambdaNonzero = !report.lambda.is_zero();
    const ExactMatrix power = a.pow(m);

    report.chainInvariantUnderA = true;
    report.chainInvariantUnderPower = true;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<GaussianRational>> rows;
        for (int i = 0; i < k; ++i) {
            std::vector<GaussianRational> e(n);
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        SubspaceBasis vk(n, rows);
        if (!is_invariant(a, vk)) report.chainInvariantUnderA = false;
        if (!is_invariant(power, vk)) report.chainInvariantUnderPower = false;
    }

    if (report.lambdaNonzero) {
        ExactMatrix c = power;
        const GaussianRational lm = report.lambda.pow(m);
        for (int i = 0; i < n; ++i) c.at(i, i) -= lm;

        bool shape = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                if (!c.at(i, j).is_zero()) shape = false;
            }
        bool match = true;
        const GaussianRational factor = GaussianRational(m) * report.lambda.pow(m - 1);
        for (int i = 0; i + 1 < n; ++i) {
            report.superdiagonal.push_back(c.at(i, i + 1));
            if (c.at(i, i + 1).is_zero()) shape = false;
            if (!(c.at(i, i + 1) == factor * a.at(i, i + 1))) match = false;
        }
        report.powerShapeOk = shape;
        report.superdiagMatchesFormula = match;
    } else if (m >= n) {
        bool zero = true;
        for (int i = 0; i < n && zero; ++i)
            for (int j = 0; j < n && zero; ++j) {
                if (!power.at(i, j).is_zero()) zero = false;
            }
        report.powerIsZero = zero;
        report.degenerate = zero; // A^m = 0: every subspace is A^m-invariant
    }

    return report;
}

} // namespace montel
