#include <catch2/catch_amalgamated.hpp>

#include "lgenus/rational.hpp"
#include "test_support.hpp"

using lgenus::BigInt;
using lgenus::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator", "[rational]") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(1, -2).to_string() == "-1/2");
    CHECK(Rational(-6, -4).to_string() == "3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(5, 1).to_string() == "5");
    CHECK(Rational(BigInt("123456789012345678901234567890"), BigInt(3)).to_string() ==
          "41152263004115226300411522630");
}

TEST_CASE("canonical text form round-trips", "[rational]") {
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789123456789123/977"}) {
        CHECK(Rational::from_string(s).to_string() == s);
    }
    CHECK(Rational::from_string("4/6").to_string() == "2/3");
    CHECK_THROWS_AS(Rational::from_string("banana"), lgenus::invalid_input);
    CHECK_THROWS_AS(Rational::from_string("1/0"), lgenus::non_unit_error);
}

TEST_CASE("arithmetic is exact", "[rational]") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-5, 7).inverse() == Rational(7, -5));
    CHECK(Rational(2, 3).pow(10) == Rational(1024, 59049));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).inverse(), lgenus::non_unit_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), lgenus::non_unit_error);
}

TEST_CASE("results stay in lowest terms on random samples", "[rational]") {
    testsupport::Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        Rational a = testsupport::random_rational(rng);
        Rational b = testsupport::random_rational(rng);
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.den() > 0);
            BigInt g;
            mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
            CHECK(g == 1);
        }
        // field identities on exact values
        CHECK(a + b == b + a);
        CHECK((a + b) * (a - b) == a * a - b * b);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("ordering is consistent with cross multiplication", "[rational]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) >= Rational(7, 5));
    CHECK(Rational(2, 6).sign() == 1);
    CHECK(Rational(-2, 6).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}
