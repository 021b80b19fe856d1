#include "doctest.h"

#include "ore/grammar.hpp"
#include "test_util.hpp"

using namespace ore;
using ore::testing::Rng;

namespace {

OreAlgebra Dx(CoeffDomain d = CoeffDomain::Poly) {
    return OreAlgebra::make("x", "Dx", AlgKind::D, d);
}

} // namespace

TEST_CASE("parse frozen examples") {
    auto d = Dx();
    OrePoly L = parse_operator("(5*x^2+3*x-7)*Dx^2 + (3*x^2+8*x-1)*Dx + (9*x^2-3*x+8)", d);
    CHECK(L.order() == 2);
    CHECK(L.degree() == 2);
    CHECK(format_operator(L) == "(5*x^2+3*x-7)*Dx^2 + (3*x^2+8*x-1)*Dx + (9*x^2-3*x+8)");

    CHECK(parse_operator("Dx", d) == OrePoly::generator(d));

    auto s = OreAlgebra::make("n", "Sn", AlgKind::S);
    OrePoly fib = parse_operator("Sn^2 - Sn - 1", s);
    CHECK(fib.order() == 2);
    CHECK(format_operator(fib) == "Sn^2 - Sn - 1");

    CHECK(parse_operator("0", d).is_zero());
    CHECK(parse_operator("Dx*x - x*Dx", d) == OrePoly::scalar(d, BFrac(Scalar(1))));
}

TEST_CASE("parse error reporting") {
    auto d = Dx();
    CHECK_THROWS_AS(parse_operator("Dx +", d), parse_error);
    CHECK_THROWS_AS(parse_operator("3x", d), parse_error);     // implicit multiplication
    CHECK_THROWS_AS(parse_operator("Sn^2", d), parse_error);   // unknown symbol
    CHECK_THROWS_AS(parse_operator("x^(2)", d), parse_error);  // exponent must be a literal
    CHECK_THROWS_AS(parse_operator("x ? 1", d), parse_error);
    CHECK_THROWS_AS(parse_operator("", d), parse_error);
    try {
        parse_operator("Dx + %", d);
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("division rules by domain") {
    auto dp = Dx();
    auto dk = Dx(CoeffDomain::RatFun);
    CHECK(parse_operator("(1/2)*Dx", dp) ==
          OrePoly::from_coeff_list(dp, {BFrac(), BFrac(Scalar(Rational(1, 2)))}));
    CHECK(parse_operator("x/2", dp) ==
          OrePoly::scalar(dp, BFrac(BPoly::monomial(Scalar(Rational(1, 2)), 1))));
    CHECK_THROWS_AS(parse_operator("1/x", dp), parse_error);
    OrePoly invx = parse_operator("(1/x)*Dx", dk);
    CHECK(invx.coeff(1) == BFrac(BPoly(Scalar(1)), BPoly::var()));
    CHECK_THROWS_AS(parse_operator("Dx/x", dk), parse_error);
    CHECK_THROWS_AS(parse_operator("1/0", dk), parse_error);
    CHECK_THROWS_AS(parse_operator("1/(Dx)", dk), parse_error);
}

TEST_CASE("unary minus binds below powers") {
    auto d = Dx();
    OrePoly a = parse_operator("-x^2", d);
    OrePoly b = parse_operator("0 - x^2", d);
    CHECK(a == b);
}

TEST_CASE("q tokens parse in q-algebras") {
    auto qa = OreAlgebra::make("x", "Qx", AlgKind::Q, CoeffDomain::Poly, Scalar::q());
    OrePoly L = parse_operator("q*Qx - 1", qa);
    CHECK(L.coeff(1) == BFrac(Scalar::q()));
    CHECK(format_operator(L) == "q*Qx - 1");

    OrePoly M = parse_operator("(q^2+1)*x*Qx + q", qa);
    CHECK(format_operator(M) == "((q^2+1)*x)*Qx + q");
    CHECK(parse_operator(format_operator(M), qa) == M);

    auto d = Dx();
    CHECK_THROWS_AS(parse_operator("q*Dx", d), parse_error);
}

TEST_CASE("parse-format round trip on random operators") {
    Rng rng(0x60A7);
    auto sp = OreAlgebra::make("n", "Sn", AlgKind::S);
    auto sk = sp.with_domain(CoeffDomain::RatFun);
    for (int it = 0; it < 120; ++it) {
        OrePoly L = random_operator(sp, static_cast<int>(rng.uniform(0, 4)), 3,
                                    static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
        CHECK(parse_operator(format_operator(L), sp) == L);
    }
    for (int it = 0; it < 120; ++it) {
        // fraction coefficients: build L / d with a random denominator
        OrePoly L = random_operator(sk, static_cast<int>(rng.uniform(0, 3)), 3,
                                    static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
        BPoly den = rng.bpoly(2);
        if (den.is_zero()) den = BPoly(Scalar(1));
        OrePoly M = BFrac(BPoly(Scalar(1)), den) * L;
        CHECK(parse_operator(format_operator(M), sk) == M);
    }
}
