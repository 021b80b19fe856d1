#include "doctest.h"

#include "ore/grammar.hpp"
#include "ore/orepoly.hpp"
#include "test_util.hpp"

using namespace ore;
using ore::testing::Rng;

namespace {

BFrac xfrac() { return BFrac::var(); }

BPoly xpow(int k) { return BPoly::monomial(Scalar(1), k); }

OreAlgebra Dx() { return OreAlgebra::make("x", "Dx", AlgKind::D); }
OreAlgebra Sn() { return OreAlgebra::make("n", "Sn", AlgKind::S); }

std::vector<OreAlgebra> builtin_algebras() {
    return {
        OreAlgebra::make("x", "Dx", AlgKind::D),
        OreAlgebra::make("x", "Sx", AlgKind::S),
        OreAlgebra::make("x", "Tx", AlgKind::T),
        OreAlgebra::make("x", "Fx", AlgKind::F),
        OreAlgebra::make("x", "Qx", AlgKind::Q, CoeffDomain::Poly, Scalar(2)),
        OreAlgebra::make("x", "Jx", AlgKind::J, CoeffDomain::Poly, Scalar::q()),
    };
}

} // namespace

TEST_CASE("make_algebra built-in commutation tables") {
    auto d = Dx();
    CHECK(d.sigma_image() == xfrac());
    CHECK(d.delta_image() == BFrac(Scalar(1)));

    auto q2 = OreAlgebra::make("x", "Qx", AlgKind::Q, CoeffDomain::Poly, Scalar(2));
    CHECK(q2.sigma_image() == BFrac(BPoly::monomial(Scalar(2), 1)));
    CHECK(q2.delta_image().is_zero());
    CHECK(q2.const_kind() == ConstKind::Rationals);

    auto jq = OreAlgebra::make("x", "Jx", AlgKind::J, CoeffDomain::Poly, Scalar::q());
    CHECK(jq.const_kind() == ConstKind::RatFunInQ);

    CHECK_THROWS_AS(OreAlgebra::make("x", "Qx", AlgKind::Q), domain_error);
    CHECK_THROWS_AS(OreAlgebra::make("x", "X", AlgKind::Custom, CoeffDomain::Poly,
                                     std::nullopt, BFrac(Scalar(5)), BFrac(Scalar(1))),
                    domain_error);
    CHECK_THROWS_AS(OreAlgebra::make("x", "X", AlgKind::Custom), domain_error);
}

TEST_CASE("sigma and delta on base ring elements") {
    auto d = Dx();
    CHECK(d.delta(BFrac(xpow(5))) == BFrac(BPoly::monomial(Scalar(5), 4)));
    CHECK(d.sigma(BFrac(xpow(5))) == BFrac(xpow(5)));

    auto s = OreAlgebra::make("x", "Sx", AlgKind::S);
    BPoly xp1_sq = (xpow(1) + BPoly(Scalar(1))) * (xpow(1) + BPoly(Scalar(1)));
    CHECK(s.sigma(BFrac(xpow(2))) == BFrac(xp1_sq));
    CHECK(s.delta(BFrac(xpow(2))).is_zero());

    auto j = OreAlgebra::make("x", "Jx", AlgKind::J, CoeffDomain::Poly, Scalar::q());
    BFrac want = BFrac(BPoly::monomial(Scalar::q() + Scalar(1), 1));
    CHECK(j.delta(BFrac(xpow(2))) == want);

    // negative sigma powers for the invertible built-ins
    CHECK(s.sigma_pow(s.sigma_pow(BFrac(xpow(3)), -2), 2) == BFrac(xpow(3)));
    auto q2 = OreAlgebra::make("x", "Qx", AlgKind::Q, CoeffDomain::Poly, Scalar(2));
    CHECK(q2.sigma_pow(BFrac(xpow(1)), -1) == BFrac(BPoly::monomial(Scalar(Rational(1, 2)), 1)));
}

TEST_CASE("commutation rule X*a = sigma(a)*X + delta(a) exhaustively") {
    for (const auto& alg : builtin_algebras()) {
        OrePoly X = OrePoly::generator(alg);
        for (int k = 0; k <= 8; ++k) {
            BFrac a(xpow(k));
            OrePoly lhs = X * OrePoly::scalar(alg, a);
            OrePoly rhs = alg.sigma(a) * X + OrePoly::scalar(alg, alg.delta(a));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("paper commutation sessions") {
    auto d = Dx();
    OrePoly L = OrePoly::generator(d) * OrePoly::scalar(d, xfrac());
    CHECK(format_operator(L) == "x*Dx + 1");

    auto s = OreAlgebra::make("x", "Sx", AlgKind::S);
    OrePoly M = OrePoly::generator(s) * OrePoly::scalar(s, xfrac());
    CHECK(format_operator(M) == "(x+1)*Sx");

    auto q2 = OreAlgebra::make("x", "Qx", AlgKind::Q, CoeffDomain::Poly, Scalar(2));
    OrePoly Qx = OrePoly::generator(q2) * OrePoly::scalar(q2, xfrac());
    CHECK(format_operator(Qx) == "2*x*Qx");

    auto qsym = OreAlgebra::make("x", "Qx", AlgKind::Q, CoeffDomain::Poly, Scalar::q());
    OrePoly Qs = OrePoly::generator(qsym) * OrePoly::scalar(qsym, xfrac());
    CHECK(format_operator(Qs) == "q*x*Qx");

    auto c = OreAlgebra::make("x", "X", AlgKind::Custom, CoeffDomain::Poly, std::nullopt,
                              BFrac(xpow(1) + BPoly(Scalar(1))), BFrac(Scalar(1)));
    OrePoly Cx = OrePoly::generator(c) * OrePoly::scalar(c, xfrac());
    CHECK(format_operator(Cx) == "(x+1)*X + 1");
}

TEST_CASE("ring axioms on random operators") {
    Rng rng(0x0AE0);
    auto alg = Sn();
    auto random_op = [&](std::uint64_t seed) {
        return random_operator(alg, static_cast<int>(seed % 5), 4, seed);
    };
    OrePoly one = OrePoly::scalar(alg, BFrac(Scalar(1)));
    for (int it = 0; it < 200; ++it) {
        auto a = random_op(static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
        auto b = random_op(static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
        auto c = random_op(static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(one * a == a);
        CHECK(a * one == a);
    }
}

TEST_CASE("delta is a skew derivation for products") {
    Rng rng(0xDE17A);
    for (const auto& alg : builtin_algebras()) {
        for (int it = 0; it < 40; ++it) {
            BFrac a(rng.bpoly(4)), b(rng.bpoly(4));
            CHECK(alg.delta(a * b) == alg.delta(a) * b + alg.sigma(a) * alg.delta(b));
        }
    }
}

TEST_CASE("apply acts as a module action and basic actions") {
    auto d = Dx();
    OrePoly D = OrePoly::generator(d);
    CHECK(apply(D, BFrac(xfrac().num(), xfrac().num())) == BFrac()); // D(1) = 0
    BFrac inv_x(BPoly(Scalar(1)), xpow(1));
    CHECK(apply(D, inv_x) == -BFrac(BPoly(Scalar(1)), xpow(2)));

    auto s = Sn();
    OrePoly fib = parse_operator("Sn^2 - Sn - 1", s);
    std::vector<Scalar> data{Scalar(0), Scalar(1), Scalar(1), Scalar(2),
                             Scalar(3), Scalar(5), Scalar(8)};
    auto zeros = apply(fib, data);
    REQUIRE(zeros.size() == 5);
    for (const auto& z : zeros) CHECK(z.is_zero());

    Rng rng(0xAC10);
    for (const auto& alg : {Dx(), OreAlgebra::make("x", "Sx", AlgKind::S)}) {
        for (int it = 0; it < 50; ++it) {
            auto L = random_operator(alg, 2, 2, static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
            auto M = random_operator(alg, 2, 2, static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
            BFrac f(rng.bpoly(4));
            CHECK(apply(L * M, f) == apply(L, apply(M, f)));
        }
    }
}

TEST_CASE("sequence action for the forward difference kind") {
    auto f = OreAlgebra::make("n", "Fn", AlgKind::F);
    OrePoly Fn = OrePoly::generator(f);
    std::vector<Scalar> squares;
    for (long n = 0; n < 8; ++n) squares.emplace_back(Rational(n * n));
    auto d1 = apply(Fn, squares); // 2n+1
    REQUIRE(d1.size() == 7);
    for (long n = 0; n < 7; ++n) CHECK(d1[static_cast<std::size_t>(n)] == Scalar(2 * n + 1));
    CHECK_THROWS_AS(apply(Fn.pow(9), squares), domain_error);
    CHECK_THROWS_AS(apply(OrePoly::generator(Dx()), squares), unsupported_error);
}

TEST_CASE("series action") {
    auto d = Dx();
    // exp(x) truncated
    std::vector<Scalar> cs;
    Rational f(1);
    for (long n = 0; n < 10; ++n) {
        cs.emplace_back(f);
        f /= Rational(n + 1);
    }
    TruncSeries e(cs, 10);
    OrePoly L = parse_operator("Dx - 1", d);
    TruncSeries img = apply(L, e);
    CHECK(img.precision() == 9);
    CHECK(img.is_zero());
}

TEST_CASE("convert between coefficient domains") {
    auto d = Dx();
    auto dk = d.with_domain(CoeffDomain::RatFun);
    OrePoly L = parse_operator("(5*x^2+3*x-7)*Dx^2 + (3*x^2+8*x-1)*Dx + (9*x^2-3*x+8)", d);
    OrePoly Lk = convert(L, dk);
    CHECK(Lk.coeffs() == L.coeffs());
    CHECK(convert(L, d) == L);
    CHECK(Lk == L); // same structure, same values

    OrePoly bad = OrePoly::from_coeff_list(dk, {BFrac(), BFrac(BPoly(Scalar(1)), xpow(1))});
    CHECK_THROWS_AS(convert(bad, d), conversion_error);

    auto other = Sn();
    CHECK_THROWS_AS(OrePoly::generator(d) + OrePoly::generator(other), conversion_error);
}

TEST_CASE("from_coeff_list and random_operator") {
    auto d = Dx();
    BPoly x = xpow(1);
    std::vector<BFrac> cs{BFrac(BPoly::monomial(Scalar(5), 1)),
                          BFrac(BPoly::monomial(Scalar(7), 1) - BPoly(Scalar(3))),
                          BFrac(BPoly::monomial(Scalar(3), 1) + BPoly(Scalar(1)))};
    OrePoly L = OrePoly::from_coeff_list(d, cs);
    CHECK(format_operator(L) == "(3*x+1)*Dx^2 + (7*x-3)*Dx + 5*x");

    CHECK(OrePoly::from_coeff_list(d, {}).is_zero());
    CHECK(OrePoly::from_coeff_list(d, {BFrac(), BFrac()}).is_zero());

    OrePoly R = random_operator(d, 3, 2, 12345);
    CHECK(R.order() == 3);
    CHECK(R.degree() <= 2);
    CHECK(random_operator(d, 3, 2, 12345) == R); // seeded determinism
}
