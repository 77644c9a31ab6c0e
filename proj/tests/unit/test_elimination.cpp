#include <doctest.h>

#include "montel/elimination.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace montel;
using montel::testing::Rng;
using montel::testing::rank_reverse_elimination;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = GaussianRational(rows[i][j]);
    return m;
}

} // namespace

TEST_SUITE("elimination") {

TEST_CASE("identity has an empty nullspace") {
    CHECK(nullspace(ExactMatrix::identity(2)).empty());
}

TEST_CASE("kernel of the squared one-variable difference matrix") {
    // Delta_1 on polynomials of degree <= 2 in the monomial basis.
    ExactMatrix a = from_rows({{0, 1, 1}, {0, 0, 2}, {0, 0, 0}});
    auto basis = nullspace(a.pow(2));
    REQUIRE(basis.size() == 2);
    // spans exactly the first two coordinates
    SubspaceBasis got(3, basis);
    SubspaceBasis expected(3, {{GaussianRational(1), GaussianRational(0), GaussianRational(0)},
                               {GaussianRational(0), GaussianRational(1), GaussianRational(0)}});
    CHECK(got == expected);
}

TEST_CASE("random rank-3 matrix yields 3 null vectors, all exact") {
    Rng rng(11);
    // rank <= 3 by construction: 4x3 times 3x6
    ExactMatrix left = rng.matrix(4, 3);
    ExactMatrix right = rng.matrix(3, 6);
    ExactMatrix m = left * right;
    int r = rank(m);
    CHECK(r == rank_reverse_elimination(m)); // independent elimination order
    auto basis = nullspace(m);
    CHECK(static_cast<int>(basis.size()) == 6 - r);
    for (const auto& v : basis) {
        for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
}

TEST_CASE("rank + nullity = cols on random matrices, cross-checked") {
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        const int rows = static_cast<int>(rng.pick(1, 6));
        const int cols = static_cast<int>(rng.pick(1, 7));
        ExactMatrix m = rng.matrix(rows, cols);
        auto basis = nullspace(m);
        const int r = rank(m);
        CHECK(static_cast<int>(basis.size()) + r == cols);
        CHECK(rank_reverse_elimination(m) == r);
    }
}

TEST_CASE("rref is canonical for the row space") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        ExactMatrix m = rng.matrix(4, 5);
        // permuting and rescaling rows must not change the RREF rows
        ExactMatrix shuffled(4, 5);
        std::vector<int> perm{2, 0, 3, 1};
        for (int i = 0; i < 4; ++i) {
            GaussianRational scale = rng.nonzero_scalar();
            for (int j = 0; j < 5; ++j) shuffled.at(i, j) = m.at(perm[i], j) * scale;
        }
        Echelon a = rref(m), b = rref(shuffled);
        REQUIRE(a.rank() == b.rank());
        for (int i = 0; i < a.rank(); ++i)
            for (int j = 0; j < 5; ++j) CHECK(a.mat.at(i, j) == b.mat.at(i, j));
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(ExactMatrix::identity(3)) == GaussianRational(1));
    ExactMatrix m = from_rows({{2, 1}, {7, 4}});
    CHECK(determinant(m) == GaussianRational(1));
    ExactMatrix s = from_rows({{1, 2}, {2, 4}});
    CHECK(determinant(s) == GaussianRational(0));
    // product rule on random matrices
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = rng.matrix(4, 4), b = rng.matrix(4, 4);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

} // TEST_SUITE
