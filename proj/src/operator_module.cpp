#include "montel/operator_module.hpp"

namespace montel {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

ModuleBasis::ModuleBasis(int dim, std::vector<GaussianRational> lambda, int maxDegree)
    : dim_(dim), lambda_(std::move(lambda)), maxDegree_(maxDegree) {
    if (dim_ < 1) throw input_error("module: dimension must be positive");
    if (static_cast<int>(lambda_.size()) != dim_) {
        throw input_error("module: lambda dimension mismatch");
    }
    for (const auto& v : lambda_) {
        if (v.is_zero()) throw input_error("module: lambda component is zero");
    }
    if (maxDegree_ < 0) throw input_error("module: maxDegree must be non-negative");
    basis_ = enumerate_multi_indices(dim_, maxDegree_);
    for (int j = 0; j < static_cast<int>(basis_.size()); ++j) index_.emplace(basis_[j], j);
}

int ModuleBasis::indexOf(const MultiIndex& alpha) const {
    auto it = index_.find(alpha);
    return it == index_.end() ? -1 : it->second;
}

GaussianRational diagonal_factor(const std::vector<GaussianRational>& lambda,
                                 const LatticeVector& h) {
    if (static_cast<int>(lambda.size()) != h.dim()) {
        throw input_error("diagonal factor: dimension mismatch");
    }
    for (const auto& v : lambda) {
        if (v.is_zero()) throw input_error("diagonal factor: lambda component is zero");
    }
    return vector_power(lambda, h.entries) - GaussianRational(1);
}

bool is_invertible_on_module(const std::vector<GaussianRational>& lambda, const LatticeVector& h) {
    return !diagonal_factor(lambda, h).is_zero();
}

ExactMatrix operator_matrix(const LatticeVector& h, const ModuleBasis& module) {
    if (h.dim() != module.dim()) throw input_error("operator matrix: dimension mismatch");
    const int n = module.size();
    const int d = module.dim();
    const GaussianRational lh = vector_power(module.lambda(), h.entries);
    ExactMatrix a(n, n);

    for (int j = 0; j < n; ++j) {
        const MultiIndex& alpha = module.basis()[j];
        // Delta_h(n^alpha lambda^n) = ((n+h)^alpha lambda^h - n^alpha) lambda^n.
        // Expand (n+h)^alpha over gamma <= alpha; every gamma stays inside the
        // block, which is what makes the matrix upper triangular.
        std::vector<int> gamma(d, 0);
        while (true) {
            GaussianRational c = lh;
            for (int k = 0; k < d && !c.is_zero(); ++k) {
                int drop = alpha.entries[k] - gamma[k];
                if (drop > 0) {
                    c *= GaussianRational(binom(alpha.entries[k], gamma[k])) *
                         GaussianRational(mpz_class(static_cast<long>(h.entries[k]))).pow(drop);
                }
            }
            MultiIndex g(gamma);
            if (g == alpha) c -= GaussianRational(1);
            if (!c.is_zero()) a.at(module.indexOf(g), j) = c;

            int k = d - 1;
            while (k >= 0 && gamma[k] == alpha.entries[k]) {
                gamma[k] = 0;
                --k;
            }
            if (k < 0) break;
            ++gamma[k];
        }
    }
    return a;
}

std::vector<GaussianRational> coordinates(const ModuleBasis& module, const Polynomial& p) {
    if (p.dim() != module.dim()) throw input_error("coordinates: dimension mismatch");
    std::vector<GaussianRational> out(module.size());
    for (const auto& [alpha, c] : p.terms()) {
        int idx = module.indexOf(alpha);
        if (idx < 0) throw input_error("coordinates: polynomial has support outside the block");
        out[idx] = c;
    }
    return out;
}

ExactMatrix ambient_operator_matrix(const LatticeVector& h, const AmbientSpec& ambient) {
    ambient.validate();
    if (h.dim() != ambient.dim) throw input_error("operator matrix: dimension mismatch");
    std::vector<ExactMatrix> blocks;
    if (ambient.polyDegree) {
        blocks.push_back(operator_matrix(
            h, ModuleBasis(ambient.dim,
                           std::vector<GaussianRational>(ambient.dim, GaussianRational(1)),
                           *ambient.polyDegree)));
    }
    for (const auto& mod : ambient.expModules) {
        blocks.push_back(operator_matrix(h, ModuleBasis(ambient.dim, mod.lambda, mod.maxDegree)));
    }
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    ExactMatrix out(n, n);
    int offset = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(offset + i, offset + j) = b.at(i, j);
        offset += b.rows();
    }
    return out;
}

DegreeBoundReport degree_bound_check(const Polynomial& p, int m) {
    if (m < 1) throw input_error("degree bound check: m must be a positive integer");
    DegreeBoundReport r;
    r.m = m;
    r.dim = p.dim();
    r.bound = (m - 1) * p.dim();
    auto deg = p.degrees();
    r.totalDegree = deg.total;
    r.perVariable = deg.perVariable;
    if (p.is_zero()) {
        r.vacuous = true;
        r.applicable = true;
        r.pass = true;
        return r;
    }
    r.applicable = true;
    for (const auto& pv : deg.perVariable) {
        if (pv && *pv > m - 1) r.applicable = false;
    }
    if (r.applicable) r.pass = (*deg.total <= r.bound);
    return r;
}

} // namespace montel
