#include "ore/polytools.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ore {

int zp_degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zp_content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

ZPoly zp_primitive(const ZPoly& p) {
    Integer g = zp_content(p);
    if (g == 0) return {};
    if (!p.empty() && p.back() < 0) g = -g;
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] / g;
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    zp_trim(r);
    return r;
}

ZPoly zp_prem(const ZPoly& a, const ZPoly& b) {
    assert(!b.empty());
    ZPoly r = a;
    zp_trim(r);
    const int db = zp_degree(b);
    const Integer& blc = b.back();
    while (zp_degree(r) >= db) {
        const int dr = zp_degree(r);
        const Integer top = r.back();
        for (int i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= blc;
        for (int j = 0; j < db; ++j)
            r[static_cast<std::size_t>(dr - db + j)] -= top * b[static_cast<std::size_t>(j)];
        r.pop_back();
        zp_trim(r);
    }
    return r;
}

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly x = zp_primitive(a), y = zp_primitive(b);
    while (!y.empty()) {
        ZPoly r = zp_prem(x, y);
        x = std::move(y);
        y = zp_primitive(r);
    }
    return x;
}

ZPoly rpoly_to_zz_primitive(const RPoly& p) {
    if (p.is_zero()) return {};
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.den());
    ZPoly z(p.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Rational& c = p.coeff(static_cast<int>(i));
        z[i] = c.num() * (den / c.den());
    }
    return zp_primitive(z);
}

RPoly rpoly_from_zz(const ZPoly& p) {
    std::vector<Rational> cs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) cs[i] = Rational(p[i]);
    return RPoly(std::move(cs));
}

RPoly rpoly_shift(const RPoly& f, const Rational& c) {
    std::vector<Rational> lin{c, Rational(1)};
    return poly_compose(f, RPoly(std::move(lin)));
}

Rational resultant(const RPoly& f0, const RPoly& g0) {
    if (f0.is_zero() || g0.is_zero()) return Rational(0);
    RPoly f = f0, g = g0;
    Rational acc(1);
    bool negate = false;
    if (f.degree() < g.degree()) {
        if ((f.degree() & 1) && (g.degree() & 1)) negate = !negate;
        std::swap(f, g);
    }
    while (g.degree() > 0) {
        auto [q, r] = poly_divrem(f, g);
        (void)q;
        if (r.is_zero()) return Rational(0);
        if ((f.degree() & 1) && (g.degree() & 1)) negate = !negate;
        acc *= g.lc().pow(f.degree() - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
    acc *= g.lc().pow(f.degree());
    return negate ? -acc : acc;
}

namespace {

// Scale to integer coefficients by a positive rational only, so that the
// sign pattern of the polynomial is preserved.
RPoly scaled_primitive_keep_sign(const RPoly& p) {
    if (p.is_zero()) return p;
    RPoly s = rpoly_from_zz(rpoly_to_zz_primitive(p)); // positive leading coeff
    return p.lc().sign() < 0 ? -s : s;
}

// Sturm chain of the squarefree part.
std::vector<RPoly> sturm_chain(const RPoly& p) {
    std::vector<RPoly> chain;
    RPoly sf = poly_div_exact(p, poly_gcd(p, p.derivative()));
    chain.push_back(sf);
    chain.push_back(sf.derivative());
    while (true) {
        auto [q, r] = poly_divrem(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-scaled_primitive_keep_sign(r));
    }
    return chain;
}

int sign_variations_at(const std::vector<RPoly>& chain, const Rational& x) {
    int var = 0, last = 0;
    for (const auto& s : chain) {
        int sg = s.eval(x).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++var;
        last = sg;
    }
    return var;
}

// A half-open interval of length <= 1 holds at most one integer, so once
// the bisection reaches that size only a single candidate needs testing.
void isolate_integer_roots(const std::vector<RPoly>& chain, const RPoly& sf,
                           const Rational& a, const Rational& b, int count,
                           std::vector<Integer>& out) {
    if (count <= 0) return;
    if (b - a <= Rational(1)) {
        Integer k = b.floor();
        Rational kr{k};
        if (a < kr && kr <= b && sf.eval(kr).is_zero()) out.push_back(k);
        return;
    }
    Rational m = (a + b) / Rational(2);
    int left = sign_variations_at(chain, a) - sign_variations_at(chain, m);
    isolate_integer_roots(chain, sf, a, m, left, out);
    isolate_integer_roots(chain, sf, m, b, count - left, out);
}

} // namespace

std::vector<Integer> integer_roots(const RPoly& p) {
    if (p.is_zero()) throw domain_error("integer roots of the zero polynomial");
    std::vector<Integer> out;
    if (p.is_constant()) return out;
    RPoly q = p;
    if (q.coeff(0).is_zero()) {
        out.push_back(Integer(0));
        int v = q.valuation();
        std::vector<Rational> cs(q.coeffs().begin() + v, q.coeffs().end());
        q = RPoly(std::move(cs));
    }
    if (q.is_constant()) return out;

    // Cauchy bound: all roots lie in |x| <= 1 + max |a_i| / |a_n|.
    Rational mx(0);
    for (const auto& c : q.coeffs()) {
        Rational a = c.abs();
        if (a > mx) mx = a;
    }
    Rational bound = Rational(1) + mx / q.lc().abs();
    Rational hi{Integer(bound.floor() + 1)};
    Rational lo = -hi;

    auto chain = sturm_chain(q);
    const RPoly& sf = chain.front();
    int total = sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
    isolate_integer_roots(chain, sf, lo, hi, total, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Integer> shift_coincidences(const RPoly& A, const RPoly& B) {
    std::vector<Integer> out;
    if (A.is_zero() || B.is_zero() || A.is_constant() || B.is_constant()) return out;
    const int dmax = A.degree() * B.degree();
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(dmax) + 1);
    for (int h = 0; h <= dmax; ++h) {
        xs.emplace_back(static_cast<long>(h));
        ys.push_back(resultant(rpoly_shift(A, Rational(static_cast<long>(h))), B));
    }
    RPoly H = lagrange_interpolate(xs, ys);
    if (H.is_zero()) throw domain_error("degenerate resultant in shift analysis");
    for (const auto& h : integer_roots(H)) {
        if (h < 0) continue;
        // Filter interpolation artifacts with an exact gcd check.
        long hl = static_cast<long>(h.get_si());
        RPoly g = poly_gcd(rpoly_shift(A, Rational(hl)), B);
        if (g.degree() > 0) out.push_back(h);
    }
    return out;
}

std::vector<RPoly> squarefree_decomposition(const RPoly& p) {
    std::vector<RPoly> out;
    if (p.is_zero() || p.is_constant()) return out;
    RPoly f = poly_monic(p);
    RPoly d = poly_gcd(f, f.derivative());
    RPoly b = poly_div_exact(f, d);
    RPoly c = poly_div_exact(f.derivative(), d);
    RPoly w = c - b.derivative();
    while (!b.is_one()) {
        RPoly a = poly_gcd(b, w);
        out.push_back(a);
        b = poly_div_exact(b, a);
        w = poly_div_exact(w, a) - b.derivative();
    }
    return out;
}

RPoly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    assert(xs.size() == ys.size());
    RPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RPoly term(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * RPoly(std::vector<Rational>{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        acc += (ys[i] / denom) * term;
    }
    return acc;
}

std::string rpoly_to_string(const RPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        bool unit = a.is_one();
        if (!unit || i == 0) os << a.to_string();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace ore
