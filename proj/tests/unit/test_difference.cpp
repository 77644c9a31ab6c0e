#include <doctest.h>

#include "montel/difference.hpp"
#include "montel/reconstruct.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace montel;
using montel::testing::Rng;
using montel::testing::delta_iterated;

namespace {

Polynomial univariate_power(int e) {
    return Polynomial::monomial(MultiIndex({e}), GaussianRational(1));
}

std::vector<GaussianRational> rational_step(std::initializer_list<mpq_class> xs) {
    std::vector<GaussianRational> out;
    for (const auto& x : xs) out.emplace_back(x);
    return out;
}

} // namespace

TEST_SUITE("difference") {

TEST_CASE("single differences") {
    // Delta_1 n^2 = 2n + 1
    Polynomial got = delta(LatticeVector({1}), univariate_power(2));
    Polynomial want(1);
    want.add_term(MultiIndex({1}), GaussianRational(2));
    want.add_term(MultiIndex({0}), GaussianRational(1));
    CHECK(got == want);

    // constants vanish
    CHECK(delta(LatticeVector({3}), Polynomial::constant(1, GaussianRational(7))).is_zero());

    // Delta_h lambda^n = (lambda^h - 1) lambda^n
    auto lambda = std::vector<GaussianRational>{GaussianRational(2)};
    ExpPolynomial pure(1, {ExpMonomialTerm(lambda, Polynomial::constant(1, GaussianRational(1)))});
    ExpPolynomial diff = delta(LatticeVector({3}), pure);
    REQUIRE(diff.terms().size() == 1);
    CHECK(diff.terms()[0].poly == Polynomial::constant(1, GaussianRational(7))); // 2^3 - 1
}

TEST_CASE("powers vanish exactly when the degree drops out") {
    CHECK(delta_power(LatticeVector({1}), 3, univariate_power(2)).is_zero());
    CHECK(delta_power(LatticeVector({1}), 2, univariate_power(2)) ==
          Polynomial::constant(1, GaussianRational(2)));
    CHECK(delta_power(LatticeVector({2}), 4, Polynomial(1)).is_zero());
    CHECK_THROWS_AS(delta_power(LatticeVector({1}), 0, univariate_power(2)), input_error);
}

TEST_CASE("mixed differences") {
    CHECK(delta_mixed({LatticeVector({1}), LatticeVector({1})}, univariate_power(2)) ==
          delta(LatticeVector({1}), delta(LatticeVector({1}), univariate_power(2))));

    Polynomial n1n2 = Polynomial::monomial(MultiIndex({1, 1}), GaussianRational(1));
    CHECK(delta_mixed({LatticeVector({1, 0}), LatticeVector({0, 1})}, n1n2) ==
          Polynomial::constant(2, GaussianRational(1)));

    // the counterexample table: mixed difference at the origin is 1
    SampleTable table = counterexample_table(3);
    SampleTable mixed = delta_mixed({LatticeVector({1, 0}), LatticeVector({0, 1})}, table);
    CHECK(mixed.at(LatticeVector({0, 0})) == GaussianRational(1));
}

TEST_CASE("table differences shrink the window") {
    Polynomial p = univariate_power(2);
    SampleTable t = SampleTable::sample(p, LatticeVector({0}), LatticeVector({4}));
    SampleTable d = delta(LatticeVector({1}), t);
    CHECK(d.lower() == LatticeVector({0}));
    CHECK(d.upper() == LatticeVector({3}));
    SampleTable dneg = delta(LatticeVector({-1}), t);
    CHECK(dneg.lower() == LatticeVector({1}));
    CHECK(dneg.upper() == LatticeVector({4}));
    CHECK_THROWS_AS(delta_power(LatticeVector({1}), 5, t), input_error);
}

TEST_CASE("sampling commutes with differencing") {
    Rng rng(29);
    for (int t = 0; t < 15; ++t) {
        const int d = static_cast<int>(rng.pick(1, 2));
        ExpPolynomial f(d, {ExpMonomialTerm(rng.lambda(d), rng.polynomial(d, 3, 3))});
        LatticeVector h = rng.lattice(d, -2, 2);
        LatticeVector lower(std::vector<long long>(d, -3));
        LatticeVector upper(std::vector<long long>(d, 3));
        SampleTable sampled = SampleTable::sample(f, lower, upper);
        Box target = shrunken_box(sampled.box(), h, 1);
        if (target.empty()) continue;
        SampleTable viaTable = delta(h, sampled);
        ExpPolynomial df = delta(h, f);
        SampleTable viaFunction = SampleTable::tabulate(
            target, [&](const LatticeVector& n) { return df.evaluate(n); });
        CHECK(viaTable == viaFunction);
    }
}

TEST_CASE("binomial formula equals iteration") {
    Rng rng(37);
    for (int t = 0; t < 15; ++t) {
        const int d = static_cast<int>(rng.pick(1, 3));
        const int m = static_cast<int>(rng.pick(1, 5));
        LatticeVector h = rng.lattice(d, -2, 2);
        Polynomial p = rng.polynomial(d, 4, 4);
        CHECK(delta_power(h, m, p) == delta_iterated(h, m, p));
        ExpPolynomial f(d, {ExpMonomialTerm(rng.lambda(d), rng.polynomial(d, 2, 2))});
        CHECK(delta_power(h, m, f) == delta_iterated(h, m, f));
    }
}

TEST_CASE("differences commute") {
    Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        const int d = static_cast<int>(rng.pick(1, 3));
        LatticeVector h1 = rng.lattice(d, -2, 2), h2 = rng.lattice(d, -2, 2);
        Polynomial p = rng.polynomial(d, 4, 4);
        CHECK(delta(h1, delta(h2, p)) == delta(h2, delta(h1, p)));
        ExpPolynomial f(d, {ExpMonomialTerm(rng.lambda(d), rng.polynomial(d, 2, 2))});
        CHECK(delta(h1, delta(h2, f)) == delta(h2, delta(h1, f)));
    }
}

TEST_CASE("differencing drops the total degree") {
    Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        const int d = static_cast<int>(rng.pick(1, 3));
        Polynomial p = rng.polynomial(d, 5, 4);
        auto before = p.degrees();
        if (!before.total || *before.total < 1) continue;
        Polynomial q = delta(rng.lattice(d, -2, 2), p);
        auto after = q.degrees();
        if (after.total) CHECK(*after.total <= *before.total - 1);
    }
}

TEST_CASE("one block stays one block under delta") {
    Rng rng(47);
    for (int t = 0; t < 20; ++t) {
        const int d = static_cast<int>(rng.pick(1, 2));
        const int mk = static_cast<int>(rng.pick(0, 3));
        auto lambda = rng.lambda(d);
        ExpPolynomial f(d, {ExpMonomialTerm(lambda, rng.polynomial(d, mk, 3))});
        ExpPolynomial g = delta(rng.lattice(d, -2, 2), f);
        for (const auto& term : g.terms()) {
            CHECK(lambda_cmp(term.lambda, lambda) == 0);
            auto deg = term.poly.degrees();
            if (deg.total) CHECK(*deg.total <= mk);
        }
    }
}

TEST_CASE("djokovic identity: stated reductions") {
    // s = 1 reduces to a plain difference for any step and polynomial
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        const int d = static_cast<int>(rng.pick(1, 3));
        std::vector<GaussianRational> h(d);
        for (auto& x : h) x = GaussianRational(rng.rational(5, 5));
        Polynomial p = rng.polynomial(d, 4, 4);
        DjokovicResult r = djokovic_check({h}, p);
        CHECK(r.equal);
        CHECK(r.lhs == delta_rational(h, p));
        CHECK(r.rhs == r.lhs);
    }

    // s = 2, steps {1, 1}, p = x^3: both sides are 6x + 6
    DjokovicResult r = djokovic_check(
        {rational_step({mpq_class(1)}), rational_step({mpq_class(1)})}, univariate_power(3));
    CHECK(r.equal);
    Polynomial want(1);
    want.add_term(MultiIndex({1}), GaussianRational(6));
    want.add_term(MultiIndex({0}), GaussianRational(6));
    CHECK(r.lhs == want);
    CHECK(r.rhs == want);

    // s = 3, random rational steps in Q^2, degree <= 4
    Rng rng2(59);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<GaussianRational>> steps(3);
        for (auto& h : steps) {
            h = {GaussianRational(rng2.rational(5, 5)), GaussianRational(rng2.rational(5, 5))};
        }
        CHECK(djokovic_check(steps, rng2.polynomial(2, 4, 4)).equal);
    }

    // imaginary steps are rejected
    CHECK_THROWS_AS(djokovic_check({{GaussianRational::i()}}, univariate_power(1)), input_error);
}

TEST_CASE("dimension mismatches are rejected across the board") {
    Polynomial p2 = Polynomial::monomial(MultiIndex({1, 1}), GaussianRational(1));
    CHECK_THROWS_AS(delta(LatticeVector({1}), p2), montel::input_error);
    CHECK_THROWS_AS(delta_power(LatticeVector({1, 0, 0}), 2, p2), montel::input_error);
    CHECK_THROWS_AS(delta_mixed({}, p2), montel::input_error);
    CHECK_THROWS_AS(p2.evaluate(LatticeVector({1})), montel::input_error);
    CHECK_THROWS_AS(is_frechet_solution(FunctionValue(p2), {LatticeVector({1})}, 2),
                    montel::input_error);
    ExpPolynomial f(2, {ExpMonomialTerm({GaussianRational(2), GaussianRational(3)},
                                        Polynomial::constant(2, GaussianRational(1)))});
    CHECK_THROWS_AS(delta(LatticeVector({1}), f), montel::input_error);
    CHECK_THROWS_AS(djokovic_check({{GaussianRational(1)}}, p2), montel::input_error);
}

TEST_CASE("frechet verdicts") {
    // extremal monomial solves the coordinate system at m = 2
    Polynomial ext = Polynomial::monomial(MultiIndex({1, 1}), GaussianRational(1));
    FrechetReport r = is_frechet_solution(FunctionValue(ext),
                                          {LatticeVector({1, 0}), LatticeVector({0, 1})}, 2);
    REQUIRE(r.overall.has_value());
    CHECK(*r.overall);

    // n^m is not a Delta_1^m solution
    FrechetReport bad =
        is_frechet_solution(FunctionValue(univariate_power(3)), {LatticeVector({1})}, 3);
    REQUIRE(bad.overall.has_value());
    CHECK_FALSE(*bad.overall);
    REQUIRE(bad.perStep.size() == 1);
    CHECK(bad.perStep[0].status == StepStatus::fails);
    REQUIRE(bad.perStep[0].residual.has_value());
    CHECK(std::get<Polynomial>(*bad.perStep[0].residual) ==
          Polynomial::constant(1, GaussianRational(6))); // 3! = 6

    // the counterexample table solves both coordinate equations at m = 2
    SampleTable table = counterexample_table(3);
    FrechetReport tab = is_frechet_solution(FunctionValue(table),
                                            {LatticeVector({1, 0}), LatticeVector({0, 1})}, 2);
    REQUIRE(tab.overall.has_value());
    CHECK(*tab.overall);
    CHECK(tab.perStep[0].window.has_value());

    // too-small windows are reported, not failed
    SampleTable tiny = SampleTable::sample(univariate_power(1), LatticeVector({0}),
                                           LatticeVector({1}));
    FrechetReport small = is_frechet_solution(FunctionValue(tiny), {LatticeVector({1})}, 3);
    CHECK_FALSE(small.overall.has_value());
    CHECK(small.perStep[0].status == StepStatus::window_too_small);
}

} // TEST_SUITE
