#pragma once

#include <optional>
#include <vector>

#include "montel/elimination.hpp"

namespace montel {

/// Subspace of the coordinate space C^n held as a reduced-row-echelon basis,
/// so equal subspaces compare equal structurally and independence is enforced
/// by construction.
class SubspaceBasis {
public:
    SubspaceBasis(int ambientDim, const std::vector<std::vector<GaussianRational>>& vectors);

    static SubspaceBasis zero(int ambientDim) { return {ambientDim, {}}; }
    static SubspaceBasis full(int ambientDim);

    int ambientDim() const { return ambientDim_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<GaussianRational>>& rows() const { return rows_; }

    bool contains(const std::vector<GaussianRational>& v) const;
    bool containsSubspace(const SubspaceBasis& other) const;

    /// Span of this plus the given vectors.
    SubspaceBasis spanWith(const std::vector<std::vector<GaussianRational>>& extra) const;

    bool operator==(const SubspaceBasis&) const = default;

private:
    int ambientDim_;
    std::vector<std::vector<GaussianRational>> rows_;
};

/// V + L(V) + ... + L^m(V), reduced. When L^m(V) is contained in V (checked),
/// the result is additionally verified L-invariant before returning: that is
/// the smallest-L-invariant-superspace situation.
SubspaceBasis box_closure(const ExactMatrix& l, const SubspaceBasis& v, int m);

/// Nested box closures, first operator innermost. Preconditions (checked):
/// equal sizes, pairwise commuting operators, and L_i^m(V) contained in V for
/// every i. The result is verified invariant under every operator and to
/// contain V.
SubspaceBasis diamond_closure(const std::vector<ExactMatrix>& ls, const SubspaceBasis& v, int m);

/// True iff L maps span(W) into span(W) (exact membership per basis vector).
bool is_invariant(const ExactMatrix& l, const SubspaceBasis& w);

/// Shape certificate for A = lambda I + B with B strictly upper triangular and
/// a nowhere-zero first superdiagonal: the invariant-subspace chain
/// V_k = span{e_1..e_k} and the behaviour of A^m.
struct ChainReport {
    int size = 0;
    int m = 1;
    GaussianRational lambda;
    bool lambdaNonzero = false;
    bool chainInvariantUnderA = false;    // every V_k invariant under A
    bool chainInvariantUnderPower = false;  // every V_k invariant under A^m

    // lambda != 0 branch: A^m = lambda^m I + C with C strictly upper
    // triangular and superdiagonal entries m lambda^(m-1) b_{i,i+1}.
    std::optional<bool> powerShapeOk;            // C strictly upper, superdiagonal nonzero
    std::optional<bool> superdiagMatchesFormula;
    std::vector<GaussianRational> superdiagonal; // of A^m - lambda^m I

    // lambda = 0, m >= size branch: A^m = 0, so every subspace is
    // A^m-invariant while A itself still forces the chain.
    std::optional<bool> powerIsZero;
    bool degenerate = false;

    bool ok() const;
};

ChainReport chain_check(const ExactMatrix& a, int m);

} // namespace montel
