#include <doctest.h>

#include "montel/scalar.hpp"
#include "rng.hpp"

using montel::GaussianRational;

TEST_SUITE("scalar") {

TEST_CASE("construction canonicalizes") {
    CHECK(GaussianRational(mpq_class(2, 4)).str() == "1/2");
    CHECK(GaussianRational(mpq_class(3, -6)).str() == "-1/2");
    mpq_class bad;
    mpq_set_si(bad.get_mpq_t(), 1, 0); // raw 1/0, never canonicalized
    CHECK_THROWS_AS((void)GaussianRational{bad}, montel::input_error);
}

TEST_CASE("canonical strings") {
    CHECK(GaussianRational(0).str() == "0");
    CHECK(GaussianRational(3).str() == "3");
    CHECK(GaussianRational(mpq_class(-1, 2)).str() == "-1/2");
    CHECK(GaussianRational::i().str() == "i");
    CHECK((-GaussianRational::i()).str() == "-i");
    CHECK(GaussianRational(mpq_class(2), mpq_class(-3, 4)).str() == "2-3/4i");
    CHECK(GaussianRational(mpq_class(0), mpq_class(1, 2)).str() == "1/2i");
    CHECK(GaussianRational(mpq_class(-1), mpq_class(1)).str() == "-1+i");
}

TEST_CASE("parsing accepts the documented forms") {
    CHECK(GaussianRational::parse("0") == GaussianRational(0));
    CHECK(GaussianRational::parse("-7/14") == GaussianRational(mpq_class(-1, 2)));
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
    CHECK(GaussianRational::parse("2-3/4i") ==
          GaussianRational(mpq_class(2), mpq_class(-3, 4)));
    CHECK(GaussianRational::parse("1/2i") == GaussianRational(mpq_class(0), mpq_class(1, 2)));
    CHECK(GaussianRational::parse("+3") == GaussianRational(3));
    CHECK_THROWS_AS(GaussianRational::parse(""), montel::input_error);
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), montel::input_error);
    CHECK_THROWS_AS(GaussianRational::parse("1.5"), montel::input_error);
    CHECK_THROWS_AS(GaussianRational::parse("2+3"), montel::input_error);
    CHECK_THROWS_AS(GaussianRational::parse("i2"), montel::input_error);
}

TEST_CASE("field arithmetic") {
    GaussianRational z(mpq_class(1, 2), mpq_class(3));
    GaussianRational w(mpq_class(-2), mpq_class(1, 3));
    CHECK((z + w) - w == z);
    CHECK((z * w) / w == z);
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z.conjugate().conjugate() == z);
    CHECK(GaussianRational(z.norm2()) == z * z.conjugate());
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("integer powers, negative through the inverse") {
    GaussianRational two(2);
    CHECK(two.pow(0) == GaussianRational(1));
    CHECK(two.pow(10) == GaussianRational(1024));
    CHECK(two.pow(-2) == GaussianRational(mpq_class(1, 4)));
    CHECK(GaussianRational::i().pow(4) == GaussianRational(1));
    CHECK(GaussianRational::i().pow(-1) == -GaussianRational::i());
}

TEST_CASE("vector power") {
    std::vector<GaussianRational> lambda{GaussianRational(2), GaussianRational(3)};
    CHECK(montel::vector_power(lambda, {1, -1}) == GaussianRational(mpq_class(2, 3)));
}

TEST_CASE("string round trip on random scalars") {
    montel::testing::Rng rng(42);
    for (int t = 0; t < 500; ++t) {
        GaussianRational v = rng.scalar(50, 20, true);
        CHECK(GaussianRational::parse(v.str()) == v);
    }
}

TEST_CASE("lex_cmp is antisymmetric and detects equality") {
    montel::testing::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = rng.scalar(5, 3, true), b = rng.scalar(5, 3, true);
        int ab = GaussianRational::lex_cmp(a, b);
        int ba = GaussianRational::lex_cmp(b, a);
        CHECK(ab == -ba);
        if (ab == 0) CHECK(a == b);
    }
}

} // TEST_SUITE
