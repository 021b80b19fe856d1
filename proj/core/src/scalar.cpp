#include "ore/scalar.hpp"

#include "ore/polytools.hpp"

namespace ore {

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    if (is_rational()) return Scalar(rat().pow(e));
    RFrac base = qfrac();
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    RFrac acc{Rational(1)};
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return Scalar(acc);
}

std::size_t Scalar::bit_size() const {
    if (is_rational()) return rat().bit_size();
    std::size_t n = 0;
    for (const auto& c : qfrac().num().coeffs()) n += c.bit_size();
    for (const auto& c : qfrac().den().coeffs()) n += c.bit_size();
    return n;
}

std::string Scalar::to_string() const {
    if (is_rational()) return rat().to_string();
    const RFrac& f = qfrac();
    if (f.is_polynomial()) return rpoly_to_string(f.num(), "q");
    return "(" + rpoly_to_string(f.num(), "q") + ")/(" + rpoly_to_string(f.den(), "q") + ")";
}

bool bpoly_all_rational(const BPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

BPoly bpoly_from_rpoly(const RPoly& p) {
    std::vector<Scalar> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.emplace_back(c);
    return BPoly(std::move(cs));
}

RPoly bpoly_to_rpoly(const BPoly& p) {
    std::vector<Rational> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational()) throw domain_error("polynomial coefficient involves q");
        cs.push_back(c.rat());
    }
    return RPoly(std::move(cs));
}

BPoly poly_gcd(const BPoly& a, const BPoly& b) {
    if (a.is_zero()) return poly_monic(b);
    if (b.is_zero()) return poly_monic(a);
    if (bpoly_all_rational(a) && bpoly_all_rational(b)) {
        ZPoly za = rpoly_to_zz_primitive(bpoly_to_rpoly(a));
        ZPoly zb = rpoly_to_zz_primitive(bpoly_to_rpoly(b));
        return poly_monic(bpoly_from_rpoly(rpoly_from_zz(zp_gcd(za, zb))));
    }
    return poly_gcd<Scalar>(a, b);
}

} // namespace ore
