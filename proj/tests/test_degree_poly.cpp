#include <catch2/catch_amalgamated.hpp>

#include "lgenus/degree_poly.hpp"
#include "test_support.hpp"

using lgenus::DegreePoly;
using lgenus::Rational;

namespace {

DegreePoly d_var() { return DegreePoly::variable(1, 0); }

} // namespace

TEST_CASE("term ordering is total degree then lexicographic", "[degree_poly]") {
    DegreePoly d1 = DegreePoly::variable(2, 0);
    DegreePoly d2 = DegreePoly::variable(2, 1);
    DegreePoly p = d1 * d1 + d2 * d2 * d2 + d1 * d2 + DegreePoly::constant(2, Rational(5));
    std::vector<std::vector<unsigned>> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    std::vector<std::vector<unsigned>> expected = {{0, 0}, {1, 1}, {2, 0}, {0, 3}};
    CHECK(order == expected);
    CHECK(p.to_string() == "5 + d1*d2 + d1^2 + d2^3");
}

TEST_CASE("zero coefficients are never stored", "[degree_poly]") {
    DegreePoly d = d_var();
    DegreePoly p = d * d - d * d;
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(p.to_string() == "0");
    CHECK((d + (-d)).is_zero());
}

TEST_CASE("arithmetic and evaluation", "[degree_poly]") {
    DegreePoly d = d_var();
    // -(1/3) d^3 + (4/3) d, the dimension-2 hypersurface signature polynomial
    DegreePoly p = Rational(-1, 3) * d.pow(3) + Rational(4, 3) * d;
    CHECK(p.to_string() == "4/3*d - 1/3*d^3");
    CHECK(p.evaluate({Rational(4)}) == Rational(-16));
    CHECK(p.evaluate({Rational(3)}) == Rational(-5));
    CHECK(p.evaluate({Rational(1)}) == Rational(1));

    DegreePoly q = (d + DegreePoly::constant(1, Rational(1))).pow(2);
    CHECK(q == d * d + Rational(2) * d + DegreePoly::constant(1, Rational(1)));
    CHECK(q.total_degree() == 2);
}

TEST_CASE("arity mismatch is a kind error", "[degree_poly]") {
    DegreePoly a(1), b(2);
    CHECK_THROWS_AS(a + b, lgenus::kind_mismatch);
    CHECK_THROWS_AS(a * b, lgenus::kind_mismatch);
    CHECK_THROWS_AS(d_var().evaluate({}), lgenus::kind_mismatch);
    CHECK_THROWS_AS(DegreePoly::variable(1, 1), lgenus::kind_mismatch);
}

TEST_CASE("arity 0 degenerates to a single rational", "[degree_poly]") {
    DegreePoly c = DegreePoly::constant(0, Rational(7, 2));
    CHECK(c.is_constant());
    CHECK(c.constant_term() == Rational(7, 2));
    CHECK((c * c).constant_term() == Rational(49, 4));
    CHECK(c.evaluate({}) == Rational(7, 2));
}

TEST_CASE("ring identities on random polynomials", "[degree_poly]") {
    testsupport::Rng rng(7);
    auto random_poly = [&rng](unsigned arity) {
        DegreePoly p(arity);
        int nterms = static_cast<int>(rng.range(0, 4));
        for (int t = 0; t < nterms; ++t) {
            DegreePoly mono = DegreePoly::constant(arity, testsupport::random_rational(rng));
            for (unsigned v = 0; v < arity; ++v) {
                long e = rng.range(0, 3);
                for (long i = 0; i < e; ++i) mono *= DegreePoly::variable(arity, v);
            }
            p += mono;
        }
        return p;
    };
    for (int i = 0; i < 50; ++i) {
        DegreePoly a = random_poly(2), b = random_poly(2), c = random_poly(2);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        std::vector<Rational> pt = {testsupport::random_rational(rng),
                                    testsupport::random_rational(rng)};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}
