#include <doctest.h>

#include "montel/closure.hpp"
#include "montel/operator_module.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace montel;
using montel::testing::Rng;
using montel::testing::orbit_closure;

namespace {

ExactMatrix delta_matrix_pi2(long h) {
    // Delta_h on univariate polynomials of degree <= 2
    ModuleBasis module(1, {GaussianRational(1)}, 2);
    return operator_matrix(LatticeVector({h}), module);
}

std::vector<GaussianRational> unit(int n, int k) {
    std::vector<GaussianRational> e(n);
    e[k] = 1;
    return e;
}

} // namespace

TEST_SUITE("closure") {

TEST_CASE("an invariant subspace is a fixpoint") {
    ExactMatrix l = delta_matrix_pi2(1);
    SubspaceBasis pi1(3, {unit(3, 0), unit(3, 1)}); // span{1, n}: Delta-invariant
    SubspaceBasis result = box_closure(l, pi1, 2);
    CHECK(result == pi1);
}

TEST_CASE("span{n^2} closes to the whole degree-2 space") {
    ExactMatrix l = delta_matrix_pi2(1);
    SubspaceBasis v(3, {unit(3, 2)});
    SubspaceBasis result = box_closure(l, v, 3); // L^3 kills n^2, so L^m(V) in V
    CHECK(result.dimension() == 3);
    CHECK(result == SubspaceBasis::full(3));
    // matches the explicit span of {v, Lv, L^2v, L^3v}
    std::vector<std::vector<GaussianRational>> orbit{unit(3, 2)};
    std::vector<GaussianRational> w = unit(3, 2);
    for (int k = 0; k < 3; ++k) {
        w = l.apply(w);
        orbit.push_back(w);
    }
    CHECK(result == SubspaceBasis(3, orbit));
}

TEST_CASE("the zero subspace stays zero") {
    ExactMatrix l = delta_matrix_pi2(2);
    CHECK(box_closure(l, SubspaceBasis::zero(3), 4) == SubspaceBasis::zero(3));
}

TEST_CASE("diamond with one operator is a box") {
    ExactMatrix l = delta_matrix_pi2(1);
    SubspaceBasis v(3, {unit(3, 2)});
    CHECK(diamond_closure({l}, v, 3) == box_closure(l, v, 3));
}

TEST_CASE("bivariate product monomial pulls in the whole chain") {
    ModuleBasis module(2, {GaussianRational(1), GaussianRational(1)}, 2);
    ExactMatrix l1 = operator_matrix(LatticeVector({1, 0}), module);
    ExactMatrix l2 = operator_matrix(LatticeVector({0, 1}), module);
    const int n = module.size(); // 6
    const int idx11 = module.indexOf(MultiIndex({1, 1}));
    SubspaceBasis v(n, {unit(n, idx11)});

    SubspaceBasis result = diamond_closure({l1, l2}, v, 2);
    CHECK(result.containsSubspace(v));
    CHECK(is_invariant(l1, result));
    CHECK(is_invariant(l2, result));
    // contains n1 n2, n1, n2, 1
    CHECK(result.contains(unit(n, idx11)));
    CHECK(result.contains(unit(n, module.indexOf(MultiIndex({1, 0})))));
    CHECK(result.contains(unit(n, module.indexOf(MultiIndex({0, 1})))));
    CHECK(result.contains(unit(n, module.indexOf(MultiIndex({0, 0})))));
    CHECK(result.dimension() == 4);

    // reordering the operators gives the same space here
    CHECK(diamond_closure({l2, l1}, v, 2) == result);
}

TEST_CASE("diamond rejects non-commuting or non-contained inputs") {
    ExactMatrix a(2, 2), b(2, 2);
    a.at(0, 1) = 1;           // nilpotent shift
    b.at(0, 0) = 1;           // projector onto e1
    SubspaceBasis v(2, {unit(2, 0)});
    CHECK_THROWS_AS(diamond_closure({a, b}, v, 2), input_error);

    // L^m(V) not inside V: V = span{n^2} with m = 1 under Delta_1
    ExactMatrix l = delta_matrix_pi2(1);
    SubspaceBasis w(3, {unit(3, 2)});
    CHECK_THROWS_AS(diamond_closure({l}, w, 1), input_error);
}

TEST_CASE("invariance checks") {
    ExactMatrix l = delta_matrix_pi2(1);
    CHECK(is_invariant(l, SubspaceBasis::full(3)));
    CHECK(is_invariant(l, SubspaceBasis(3, {unit(3, 0), unit(3, 1)})));
    CHECK_FALSE(is_invariant(l, SubspaceBasis(3, {unit(3, 2)})));
}

TEST_CASE("containment chain and idempotence") {
    Rng rng(67);
    for (int t = 0; t < 15; ++t) {
        const int n = static_cast<int>(rng.pick(2, 6));
        const int m = static_cast<int>(rng.pick(1, 4));
        ExactMatrix base = rng.matrix(n, n, 2, 1);
        // operators as polynomials of one matrix commute
        std::vector<ExactMatrix> ops;
        const int t_ops = static_cast<int>(rng.pick(1, 3));
        for (int k = 0; k < t_ops; ++k) {
            ExactMatrix acc(n, n);
            ExactMatrix pw = ExactMatrix::identity(n);
            for (int e = 0; e <= 2; ++e) {
                GaussianRational c = GaussianRational(rng.pick(-2, 2));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) acc.at(i, j) += c * pw.at(i, j);
                pw = pw * base;
            }
            ops.push_back(std::move(acc));
        }
        // engineer the containment precondition via the joint power orbit
        std::vector<ExactMatrix> powers;
        for (const auto& l : ops) powers.push_back(l.pow(m));
        std::vector<GaussianRational> seed(n);
        for (auto& x : seed) x = rng.scalar(2, 1, false);
        SubspaceBasis v = orbit_closure(powers, SubspaceBasis(n, {seed}));

        SubspaceBasis boxed = box_closure(ops.front(), v, m);
        CHECK(boxed.containsSubspace(v));
        SubspaceBasis diamond = diamond_closure(ops, v, m);
        CHECK(diamond.containsSubspace(boxed));
        for (const auto& l : ops) CHECK(is_invariant(l, diamond));

        // minimality in its testable form, and idempotence
        CHECK(boxed == orbit_closure({ops.front()}, v));
        CHECK(box_closure(ops.front(), boxed, m) == boxed);
    }
}

TEST_CASE("chain certificate for the 2x2 Jordan-like block") {
    ExactMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;
    a.at(0, 1) = 1;
    ChainReport r = chain_check(a, 2);
    CHECK(r.lambdaNonzero);
    CHECK(r.chainInvariantUnderA);
    CHECK(r.chainInvariantUnderPower);
    REQUIRE(r.powerShapeOk.has_value());
    CHECK(*r.powerShapeOk);
    REQUIRE(r.superdiagMatchesFormula.has_value());
    CHECK(*r.superdiagMatchesFormula);
    REQUIRE(r.superdiagonal.size() == 1);
    CHECK(r.superdiagonal[0] == GaussianRational(2)); // m lambda^{m-1} b = 2
    CHECK(r.ok());
}

TEST_CASE("nilpotent block flags the degenerate power") {
    ExactMatrix a(2, 2);
    a.at(0, 1) = 1;
    ChainReport r = chain_check(a, 2);
    CHECK_FALSE(r.lambdaNonzero);
    REQUIRE(r.powerIsZero.has_value());
    CHECK(*r.powerIsZero);
    CHECK(r.degenerate);
    CHECK(r.chainInvariantUnderA);
    CHECK(r.chainInvariantUnderPower);
    CHECK(r.ok());
}

TEST_CASE("scalar matrices are rejected: the chain argument needs the superdiagonal") {
    ExactMatrix a(2, 2);
    a.at(0, 0) = 3;
    a.at(1, 1) = 3;
    CHECK_THROWS_AS(chain_check(a, 2), input_error);
}

TEST_CASE("random upper triangular shape certificates") {
    Rng rng(71);
    for (int t = 0; t < 50; ++t) {
        const int n = static_cast<int>(rng.pick(2, 6));
        const int m = static_cast<int>(rng.pick(1, 5));
        GaussianRational lambda = rng.nonzero_scalar(3, 2, true);
        ExactMatrix a(n, n);
        for (int i = 0; i < n; ++i) a.at(i, i) = lambda;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (j == i + 1) {
                    a.at(i, j) = rng.nonzero_scalar(3, 2, true);
                } else if (rng.pick(0, 1) == 0) {
                    a.at(i, j) = rng.scalar(3, 2, true);
                }
            }
        ChainReport r = chain_check(a, m);
        CHECK(r.ok());
        // superdiagonal entries are exactly m lambda^{m-1} b_{i,i+1}
        const GaussianRational factor = GaussianRational(m) * lambda.pow(m - 1);
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(r.superdiagonal[i] == factor * a.at(i, i + 1));
            CHECK_FALSE(r.superdiagonal[i].is_zero());
        }
    }
}

} // TEST_SUITE
