#include <doctest.h>

#include "montel/difference.hpp"
#include "montel/closure.hpp"
#include "montel/operator_module.hpp"
#include "rng.hpp"

using namespace montel;
using montel::testing::Rng;

namespace {

std::vector<GaussianRational> ones(int d) {
    return std::vector<GaussianRational>(d, GaussianRational(1));
}

} // namespace

TEST_SUITE("operator_matrix") {

TEST_CASE("one-variable polynomial block reproduces the textbook matrix") {
    for (long h = 1; h <= 3; ++h) {
        ModuleBasis module(1, ones(1), 2);
        ExactMatrix a = operator_matrix(LatticeVector({h}), module);
        REQUIRE(a.rows() == 3);
        CHECK(a.at(0, 0) == GaussianRational(0));
        CHECK(a.at(0, 1) == GaussianRational(h));
        CHECK(a.at(0, 2) == GaussianRational(h * h));
        CHECK(a.at(1, 2) == GaussianRational(2 * h));
        CHECK(a.at(1, 0).is_zero());
        CHECK(a.at(2, 2).is_zero());
    }
}

TEST_CASE("lambda = 2, degree 0, h = 1 gives the 1x1 matrix [1]") {
    ModuleBasis module(1, {GaussianRational(2)}, 0);
    ExactMatrix a = operator_matrix(LatticeVector({1}), module);
    REQUIRE(a.rows() == 1);
    CHECK(a.at(0, 0) == GaussianRational(1));
}

TEST_CASE("bivariate degree-1 block, h = (1,0)") {
    ModuleBasis module(2, ones(2), 1);
    // basis in grlex order: 1, n1, n2
    REQUIRE(module.basis()[0] == MultiIndex({0, 0}));
    REQUIRE(module.basis()[1] == MultiIndex({1, 0}));
    REQUIRE(module.basis()[2] == MultiIndex({0, 1}));
    ExactMatrix a = operator_matrix(LatticeVector({1, 0}), module);
    // column for n1 is (1, 0, 0)^T; everything else vanishes
    CHECK(a.at(0, 1) == GaussianRational(1));
    for (int i = 0; i < 3; ++i) {
        CHECK(a.at(i, 0).is_zero());
        CHECK(a.at(i, 2).is_zero());
        if (i != 0) CHECK(a.at(i, 1).is_zero());
    }
}

TEST_CASE("diagonal factors") {
    CHECK(diagonal_factor(ones(2), LatticeVector({5, -3})).is_zero());
    CHECK(diagonal_factor({GaussianRational::i()}, LatticeVector({4})).is_zero());
    CHECK(diagonal_factor({GaussianRational(-1)}, LatticeVector({3})) == GaussianRational(-2));
}

TEST_CASE("invertibility on a block follows the diagonal factor") {
    CHECK_FALSE(is_invertible_on_module({GaussianRational(-1)}, LatticeVector({2})));
    CHECK(is_invertible_on_module({GaussianRational(-1)}, LatticeVector({3})));

    // lambda = (2,3), h = (1,-1): 2/3 - 1 = -1/3
    std::vector<GaussianRational> lambda{GaussianRational(2), GaussianRational(3)};
    LatticeVector h({1, -1});
    CHECK(diagonal_factor(lambda, h) == GaussianRational(mpq_class(-1, 3)));
    CHECK(is_invertible_on_module(lambda, h));
    // oracle: the determinant of the block matrix is the factor to the size power
    ModuleBasis module(2, lambda, 1);
    GaussianRational det = determinant(operator_matrix(h, module));
    CHECK(det == diagonal_factor(lambda, h).pow(module.size()));
    CHECK_FALSE(det.is_zero());
}

TEST_CASE("matrix is faithful to the operator and triangular") {
    Rng rng(61);
    for (int t = 0; t < 15; ++t) {
        const int d = static_cast<int>(rng.pick(1, 3));
        const int deg = static_cast<int>(rng.pick(0, d == 3 ? 3 : 4));
        auto lambda = rng.lambda(d);
        LatticeVector h = rng.lattice(d, -3, 3);
        ModuleBasis module(d, lambda, deg);
        ExactMatrix a = operator_matrix(h, module);

        const GaussianRational factor = diagonal_factor(lambda, h);
        for (int j = 0; j < module.size(); ++j) {
            CHECK(a.at(j, j) == factor);
            for (int i = j + 1; i < module.size(); ++i) CHECK(a.at(i, j).is_zero());

            // column re-derived through the difference operator itself
            ExpPolynomial basisMonomial(
                d, {ExpMonomialTerm(lambda,
                                    Polynomial::monomial(module.basis()[j], GaussianRational(1)))});
            ExpPolynomial image = delta(h, basisMonomial);
            Polynomial part(d);
            if (!image.is_zero()) {
                REQUIRE(image.terms().size() == 1);
                part = image.terms()[0].poly;
            }
            auto coords = coordinates(module, part);
            for (int i = 0; i < module.size(); ++i) CHECK(coords[i] == a.at(i, j));
        }
    }
}

TEST_CASE("kernel of the m-th power on the one-variable polynomial block") {
    for (long h : {-3, -2, -1, 1, 2, 3}) {
        for (int m = 1; m <= 4; ++m) {
            for (int n = m - 1; n <= 8; ++n) {
                ModuleBasis module(1, ones(1), n);
                auto kernel = nullspace(operator_matrix(LatticeVector({h}), module).pow(m));
                REQUIRE(static_cast<int>(kernel.size()) == m);
                // and it is exactly the span of {1, n, ..., n^(m-1)}
                SubspaceBasis got(n + 1, kernel);
                std::vector<std::vector<GaussianRational>> low;
                for (int k = 0; k < m; ++k) {
                    std::vector<GaussianRational> e(n + 1);
                    e[k] = 1;
                    low.push_back(std::move(e));
                }
                REQUIRE(got == SubspaceBasis(n + 1, low));
            }
        }
    }
}

TEST_CASE("ambient matrix is block diagonal") {
    AmbientSpec a;
    a.dim = 1;
    a.polyDegree = 1;
    a.expModules.push_back({{GaussianRational(2)}, 0});
    ExactMatrix full = ambient_operator_matrix(LatticeVector({1}), a);
    REQUIRE(full.rows() == 3);
    CHECK(full.at(0, 1) == GaussianRational(1)); // polynomial block [[0,1],[0,0]]
    CHECK(full.at(2, 2) == GaussianRational(1)); // exponential block [2^1 - 1]
    CHECK(full.at(0, 2).is_zero());
    CHECK(full.at(2, 0).is_zero());
    CHECK(full.at(1, 1).is_zero());

    // matches the per-block matrices
    ModuleBasis polyBlock(1, ones(1), 1);
    ExactMatrix p = operator_matrix(LatticeVector({1}), polyBlock);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(full.at(i, j) == p.at(i, j));
}

TEST_CASE("degree bound check") {
    // extremal boundary: per-variable (2,2), total 4 = (m-1)d for m=3, d=2
    Polynomial ext = Polynomial::monomial(MultiIndex({2, 2}), GaussianRational(1));
    DegreeBoundReport r = degree_bound_check(ext, 3);
    CHECK(r.applicable);
    REQUIRE(r.pass.has_value());
    CHECK(*r.pass);
    CHECK(*r.totalDegree == 4);
    CHECK(r.bound == 4);

    // hypothesis fails: n^3 with m = 3 (per-variable degree 3 > 2)
    DegreeBoundReport na = degree_bound_check(
        Polynomial::monomial(MultiIndex({3}), GaussianRational(1)), 3);
    CHECK_FALSE(na.applicable);
    CHECK_FALSE(na.pass.has_value());

    // zero polynomial passes vacuously
    DegreeBoundReport z = degree_bound_check(Polynomial(2), 3);
    CHECK(z.vacuous);
    CHECK(z.applicable);
    REQUIRE(z.pass.has_value());
    CHECK(*z.pass);
}

} // TEST_SUITE
