#include "montel/montel_solve.hpp"

#include <stdexcept>

#include "montel/int_matrix.hpp"

namespace montel {

namespace {

// Per-block solution vectors: nullspace of the stacked powers over all steps.
std::vector<std::vector<GaussianRational>> block_kernel(const std::vector<LatticeVector>& steps,
                                                        int m, const ModuleBasis& module) {
    ExactMatrix stacked(0, module.size());
    for (const auto& h : steps) {
        ExactMatrix power = operator_matrix(h, module).pow(m);
        stacked = stacked.rows() == 0 ? power : ExactMatrix::vstack(stacked, power);
    }
    return nullspace(stacked);
}

Polynomial from_coordinates(const ModuleBasis& module, const std::vector<GaussianRational>& v) {
    Polynomial p(module.dim());
    for (int j = 0; j < module.size(); ++j) p.add_term(module.basis()[j], v[j]);
    return p;
}

} // namespace

MontelSolution solve_montel_system(const std::vector<LatticeVector>& steps, int m,
                                   const AmbientSpec& ambient) {
    ambient.validate();
    if (steps.empty()) throw input_error("solve: step list must be non-empty");
    if (m < 1) throw input_error("solve: m must be a positive integer");
    for (const auto& h : steps) {
        if (h.dim() != ambient.dim) throw input_error("solve: step dimension mismatch");
    }

    MontelSolution out;
    out.ambient = ambient;
    out.generatesLattice = generates_lattice(steps);

    if (!ambient.polyDegree || *ambient.polyDegree < m - 1) {
        out.warnings.push_back(
            "polynomial part has degree bound below m-1; it cannot contain all "
            "polynomial solutions of the system");
    }

    std::vector<ModuleBasis> blocks;
    if (ambient.polyDegree) {
        blocks.emplace_back(ambient.dim,
                            std::vector<GaussianRational>(ambient.dim, GaussianRational(1)),
                            *ambient.polyDegree);
    }
    for (const auto& mod : ambient.expModules) {
        blocks.emplace_back(ambient.dim, mod.lambda, mod.maxDegree);
    }

    int ambientSize = 0;
    for (const auto& block : blocks) ambientSize += block.size();

    std::vector<std::vector<GaussianRational>> coordVectors;
    int blockOffset = 0;
    for (const auto& block : blocks) {
        for (const auto& v : block_kernel(steps, m, block)) {
            Polynomial p = from_coordinates(block, v);
            ExpPolynomial sol(ambient.dim, {ExpMonomialTerm(block.lambda(), std::move(p))});
            out.basis.push_back(normalize(sol));
            std::vector<GaussianRational> full(ambientSize);
            for (int j = 0; j < block.size(); ++j) full[blockOffset + j] = v[j];
            coordVectors.push_back(std::move(full));
        }
        blockOffset += block.size();
    }

    // Solution-basis contract: the coordinate vectors have full rank.
    if (!coordVectors.empty()) {
        ExactMatrix coords(static_cast<int>(coordVectors.size()), ambientSize);
        for (int i = 0; i < coords.rows(); ++i)
            for (int j = 0; j < ambientSize; ++j) coords.at(i, j) = coordVectors[i][j];
        if (rank(coords) != coords.rows()) {
            throw std::logic_error("solve: solution basis is linearly dependent");
        }
    }

    out.allPolynomial = true;
    for (const auto& sol : out.basis) {
        if (!sol.is_polynomial()) out.allPolynomial = false;
        for (const auto& t : sol.terms()) {
            auto deg = t.poly.degrees();
            if (deg.total && (!out.maxTotalDegree || *out.maxTotalDegree < *deg.total)) {
                out.maxTotalDegree = deg.total;
            }
        }
    }

    if (ambient.dim == 1 && out.generatesLattice) {
        bool ok = out.allPolynomial;
        for (const auto& sol : out.basis) {
            auto p = sol.as_polynomial();
            if (!p) {
                ok = false;
                break;
            }
            auto deg = p->degrees();
            if (deg.total && *deg.total > m - 1) ok = false;
        }
        out.d1DegreeOk = ok;
    }

    return out;
}

} // namespace montel
