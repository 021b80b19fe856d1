#include "doctest.h"

#include "ore/polytools.hpp"
#include "ore/scalar.hpp"
#include "test_util.hpp"

using namespace ore;
using ore::testing::Rng;

namespace {

RPoly rp(std::initializer_list<long> coeffs) { // lowest power first
    std::vector<Rational> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return RPoly(std::move(cs));
}

} // namespace

TEST_CASE("rational basics") {
    Rational a = Rational::from_string("-7/3");
    CHECK(a.num() == -7);
    CHECK(a.den() == 3);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK(Rational(-8).pow(2) == Rational(64));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0) == Rational(Integer(0), Integer(5)));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), domain_error);
    CHECK_THROWS_AS(Rational::from_string("1/x"), ore::error);
}

TEST_CASE("poly divrem frozen examples") {
    auto [q1, r1] = poly_divrem(rp({-1, 0, 1}), rp({-1, 1}));
    CHECK(q1 == rp({1, 1}));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divrem(rp({0, 0, 1}), rp({0, 1}));
    CHECK(q2 == rp({0, 1}));
    CHECK(r2.is_zero());

    auto [q3, r3] = poly_divrem(rp({5, 2, 0, 1}), rp({1, 0, 1}));
    CHECK(q3 == rp({0, 1}));
    CHECK(r3 == rp({5, 1}));

    CHECK_THROWS_AS(poly_divrem(rp({1}), RPoly()), domain_error);
}

TEST_CASE("poly divrem reconstructs over random inputs") {
    Rng rng(0xD15EA5E);
    for (int it = 0; it < 300; ++it) {
        RPoly a = rng.rpoly(12), b = rng.rpoly(12);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("poly gcd frozen examples") {
    CHECK(poly_gcd(rp({-1, 0, 1}), rp({-1, 1})) == rp({-1, 1}));
    CHECK(poly_gcd(RPoly(), rp({2, 4})) == rp({1, 2}).scaled(Rational(1, 2)));
    CHECK(poly_gcd(RPoly(), RPoly()).is_zero());
    CHECK(poly_gcd(rp({2, 3, 1}), rp({3, 4, 1})) == rp({1, 1}));
}

TEST_CASE("poly gcd divides and is multiplicative up to monic") {
    Rng rng(42);
    for (int it = 0; it < 150; ++it) {
        RPoly a = rng.rpoly(5, -9, 9), b = rng.rpoly(5, -9, 9), c = rng.rpoly(5, -9, 9);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        RPoly g = poly_gcd(a * b, a * c);
        auto [qb, rb] = poly_divrem(a * b, g);
        auto [qc, rc] = poly_divrem(a * c, g);
        CHECK(rb.is_zero());
        CHECK(rc.is_zero());
        CHECK(g.lc().is_one());
        CHECK(g == poly_monic(poly_monic(a) * poly_gcd(b, c)));
    }
}

TEST_CASE("scalar-coefficient gcd fast path agrees with generic") {
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
        BPoly a = rng.bpoly(7), b = rng.bpoly(7);
        BPoly fast = poly_gcd(a, b);              // non-template overload
        BPoly slow = poly_gcd<Scalar>(a, b);      // generic monic Euclid
        CHECK(fast == slow);
    }
}

TEST_CASE("ratfun stays reduced and monic under field ops") {
    Rng rng(99);
    auto check_invariants = [](const BFrac& f) {
        if (f.is_zero()) {
            CHECK(f.den().is_one());
            return;
        }
        CHECK(f.den().lc().is_one());
        CHECK(poly_gcd(f.num(), f.den()).is_one());
    };
    for (int it = 0; it < 150; ++it) {
        BPoly n1 = rng.bpoly(4), d1 = rng.bpoly(4), n2 = rng.bpoly(4), d2 = rng.bpoly(4);
        if (d1.is_zero() || d2.is_zero()) continue;
        BFrac f(n1, d1), g(n2, d2);
        check_invariants(f);
        check_invariants(g);
        check_invariants(f + g);
        check_invariants(f - g);
        check_invariants(f * g);
        if (!g.is_zero()) check_invariants(f / g);
    }
}

TEST_CASE("scalar field with q") {
    Scalar q = Scalar::q();
    Scalar two(2);
    Scalar s = (q + two) * (q - two);
    CHECK(!s.is_rational());
    Scalar back = s - q * q;
    CHECK(back.is_rational());
    CHECK(back.rat() == Rational(-4));
    CHECK((q / q).is_one());
    CHECK_THROWS_AS(q / Scalar(0), domain_error);
    CHECK(q.pow(3).to_string() == "q^3");
    CHECK((q + Scalar(1)).to_string() == "q+1");
}

TEST_CASE("integer roots via sturm isolation") {
    // (x - 3)(x + 5)^2 (x^2 + 1)(7x - 1)
    RPoly p = rp({-3, 1}) * rp({5, 1}) * rp({5, 1}) * rp({1, 0, 1}) * rp({-1, 7});
    auto roots = integer_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -5);
    CHECK(roots[1] == 3);

    CHECK(integer_roots(rp({1, 0, 1})).empty());
    auto withzero = integer_roots(rp({0, 0, 1, 1})); // x^2 (x + 1)
    REQUIRE(withzero.size() == 2);
    CHECK(withzero[0] == -1);
    CHECK(withzero[1] == 0);

    // Large roots are found exactly.
    RPoly big = rp({-1000000007, 1}) * rp({999999937, 1});
    auto bigroots = integer_roots(big);
    REQUIRE(bigroots.size() == 2);
    CHECK(bigroots[0] == -999999937);
    CHECK(bigroots[1] == 1000000007);
}

TEST_CASE("resultants and shift coincidences") {
    CHECK(resultant(rp({-2, 1}), rp({-3, 1})) == Rational(-1));
    CHECK(resultant(rp({-1, 0, 1}), rp({-1, 1})) == Rational(0));
    // res(x^2+1, x^2-1) = prod of (beta - alpha...) = 4
    CHECK(resultant(rp({1, 0, 1}), rp({-1, 0, 1})) == Rational(4));

    auto hs = shift_coincidences(rp({-3, 1}), rp({0, 1})); // x-3 vs x
    REQUIRE(hs.size() == 1);
    CHECK(hs[0] == 3);

    auto none = shift_coincidences(rp({1, 1}), rp({0, 1})); // x+1 vs x: h = -1 < 0
    CHECK(none.empty());
}

TEST_CASE("squarefree decomposition") {
    RPoly f = rp({-1, 1}) * rp({-1, 1}) * rp({2, 1});
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == rp({2, 1}));
    CHECK(parts[1] == rp({-1, 1}));
}
