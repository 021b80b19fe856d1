#include "ore/orepoly.hpp"

#include <random>

namespace ore {

namespace {

bool coeffs_polynomial(const std::vector<BFrac>& cs) {
    for (const auto& c : cs)
        if (!c.is_polynomial()) return false;
    return true;
}

// Shared algebra for a binary operation; lifts POLY-domain operands to the
// fraction-field domain when the other side needs it.
OreAlgebra common_algebra(const OreAlgebra& a, const OreAlgebra& b) {
    if (!a.same_structure(b))
        throw conversion_error("operands live in incompatible Ore algebras (" +
                               a.gen_name() + " over " + a.base_var() + " vs " +
                               b.gen_name() + " over " + b.base_var() + ")");
    if (a.coeff_domain() == CoeffDomain::RatFun) return a;
    return b;
}

// X * (sum m_k X^k) = sum (sigma(m_{k-1}) + delta(m_k)) X^k
std::vector<BFrac> left_mul_generator(const OreAlgebra& alg, const std::vector<BFrac>& m) {
    std::vector<BFrac> out(m.size() + 1);
    for (std::size_t k = 0; k <= m.size(); ++k) {
        BFrac acc;
        if (k > 0) acc += alg.sigma(m[k - 1]);
        if (k < m.size()) acc += alg.delta(m[k]);
        out[k] = std::move(acc);
    }
    return out;
}

} // namespace

OrePoly::OrePoly(OreAlgebra alg, std::vector<BFrac> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
    trim_();
    if (alg_.coeff_domain() == CoeffDomain::Poly && !coeffs_polynomial(c_))
        throw conversion_error("coefficient denominators are not units in the polynomial domain");
}

void OrePoly::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OrePoly OrePoly::generator(const OreAlgebra& a) {
    return OrePoly(a, {BFrac(), BFrac(Scalar(1))});
}

OrePoly OrePoly::scalar(const OreAlgebra& a, const BFrac& c) {
    return OrePoly(a, {c});
}

OrePoly OrePoly::from_coeff_list(const OreAlgebra& a, std::vector<BFrac> coeffs) {
    return OrePoly(a, std::move(coeffs));
}

const BFrac& OrePoly::coeff(int i) const {
    static const BFrac zero{};
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const BFrac& OrePoly::lc() const {
    if (c_.empty()) throw domain_error("leading coefficient of the zero operator");
    return c_.back();
}

int OrePoly::degree() const {
    if (is_zero()) return kNegInfDeg;
    auto [ps, den] = clear_denominators(*this);
    (void)den;
    int d = kNegInfDeg;
    for (const auto& p : ps) d = std::max(d, p.degree());
    return d;
}

OrePoly OrePoly::operator-() const {
    OrePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

OrePoly operator+(const OrePoly& a, const OrePoly& b) {
    OreAlgebra alg = common_algebra(a.alg_, b.alg_);
    std::vector<BFrac> cs(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i < a.c_.size()) cs[i] += a.c_[i];
        if (i < b.c_.size()) cs[i] += b.c_[i];
    }
    return OrePoly(std::move(alg), std::move(cs));
}

OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    OreAlgebra alg = common_algebra(a.alg_, b.alg_);
    if (a.is_zero() || b.is_zero()) return OrePoly(std::move(alg));
    std::vector<BFrac> acc;
    std::vector<BFrac> cur = b.c_; // X^i * b as i grows
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i].is_zero()) {
            if (acc.size() < cur.size()) acc.resize(cur.size());
            for (std::size_t k = 0; k < cur.size(); ++k)
                if (!cur[k].is_zero()) acc[k] += a.c_[i] * cur[k];
        }
        if (i + 1 < a.c_.size()) cur = left_mul_generator(alg, cur);
    }
    // Skew products can leave the polynomial base ring for custom rules;
    // follow the paper's coercion into the common extension when they do.
    if (alg.coeff_domain() == CoeffDomain::Poly && !coeffs_polynomial(acc))
        alg = alg.with_domain(CoeffDomain::RatFun);
    return OrePoly(std::move(alg), std::move(acc));
}

OrePoly operator*(const BFrac& s, const OrePoly& L) {
    std::vector<BFrac> cs = L.c_;
    for (auto& c : cs) c *= s;
    OreAlgebra alg = L.alg_;
    if (alg.coeff_domain() == CoeffDomain::Poly && !coeffs_polynomial(cs))
        alg = alg.with_domain(CoeffDomain::RatFun);
    return OrePoly(std::move(alg), std::move(cs));
}

OrePoly OrePoly::pow(long e) const {
    if (e < 0) throw domain_error("negative operator power");
    OrePoly acc = OrePoly::scalar(alg_, BFrac(Scalar(1)));
    OrePoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

OrePoly convert(const OrePoly& L, const OreAlgebra& a) {
    if (!L.algebra().same_structure(a))
        throw conversion_error("conversion between structurally different algebras");
    if (a.coeff_domain() == CoeffDomain::Poly) {
        for (const auto& c : L.coeffs())
            if (!c.is_polynomial())
                throw conversion_error("coefficient denominators are not units in the target domain");
    }
    return OrePoly(a, L.coeffs());
}

OrePoly random_operator(const OreAlgebra& a, int order, int degree, std::uint64_t seed) {
    if (order < 0 || degree < 0) throw domain_error("random operator needs order, degree >= 0");
    std::mt19937_64 eng(seed);
    auto draw = [&](long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto random_poly = [&](bool nonzero) {
        std::vector<Scalar> cs(static_cast<std::size_t>(draw(0, degree)) + 1);
        for (auto& c : cs) c = Scalar(draw(-9, 9));
        BPoly p(std::move(cs));
        while (nonzero && p.is_zero()) {
            std::vector<Scalar> c2{Scalar(draw(-9, 9))};
            p = BPoly(std::move(c2));
        }
        return p;
    };
    std::vector<BFrac> cs(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) cs[static_cast<std::size_t>(i)] = BFrac(random_poly(i == order));
    return OrePoly(a, std::move(cs));
}

std::pair<std::vector<BPoly>, BPoly> clear_denominators(const OrePoly& L) {
    BPoly den(Scalar(1));
    for (const auto& c : L.coeffs()) {
        if (c.is_polynomial()) continue;
        BPoly g = poly_gcd(den, c.den());
        den = poly_div_exact(den * c.den(), g);
    }
    std::vector<BPoly> ps;
    ps.reserve(L.coeffs().size());
    for (const auto& c : L.coeffs()) {
        BFrac scaled = c * BFrac(den);
        if (!scaled.is_polynomial()) throw domain_error("denominator clearing failed");
        ps.push_back(scaled.num());
    }
    return {std::move(ps), std::move(den)};
}

namespace {

BFrac act_on_ratfun(const OreAlgebra& alg, const BFrac& f) {
    const BFrac x = BFrac::var();
    switch (alg.kind()) {
        case AlgKind::D: return f.derivative();
        case AlgKind::T: return x * f.derivative();
        case AlgKind::S: return alg.sigma(f);
        case AlgKind::F: return alg.sigma(f) - f;
        case AlgKind::Q: return alg.sigma(f);
        case AlgKind::J: {
            Scalar qm1 = alg.q() - Scalar(1);
            if (qm1.is_zero()) throw unsupported_error("q-derivation action undefined at q = 1");
            return (alg.sigma(f) - f) / (BFrac(qm1) * x);
        }
        case AlgKind::Custom:
            throw unsupported_error("custom algebras have no built-in action");
    }
    throw unsupported_error("unreachable");
}

} // namespace

BFrac apply(const OrePoly& L, const BFrac& f) {
    BFrac acc, power = f;
    for (int i = 0; i <= L.order(); ++i) {
        if (!L.coeff(i).is_zero()) acc += L.coeff(i) * power;
        if (i < L.order()) power = act_on_ratfun(L.algebra(), power);
    }
    return acc;
}

BFrac apply(const OrePoly& L, const BPoly& f) { return apply(L, BFrac(f)); }

TruncSeries apply(const OrePoly& L, const TruncSeries& f) {
    const OreAlgebra& alg = L.algebra();
    auto act = [&](const TruncSeries& s) -> TruncSeries {
        switch (alg.kind()) {
            case AlgKind::D: return s.derivative();
            case AlgKind::T: return s.euler();
            case AlgKind::Q: return s.scale_var(alg.q());
            case AlgKind::J: return s.jackson(alg.q());
            default:
                throw unsupported_error("series action requires a D, T, Q or J algebra");
        }
    };
    if (L.is_zero()) return TruncSeries({}, f.precision());
    TruncSeries acc({}, f.precision());
    TruncSeries power = f;
    for (int i = 0; i <= L.order(); ++i) {
        if (!L.coeff(i).is_zero()) {
            TruncSeries term = power.mul_poly(L.coeff(i).num());
            if (!L.coeff(i).is_polynomial()) term = term.div_poly(L.coeff(i).den());
            acc = acc + term;
        }
        if (i < L.order()) power = act(power);
    }
    return acc;
}

std::vector<Scalar> apply(const OrePoly& L, const std::vector<Scalar>& f) {
    const OreAlgebra& alg = L.algebra();
    if (alg.kind() != AlgKind::S && alg.kind() != AlgKind::F)
        throw unsupported_error("sequence action requires an S or F algebra");
    if (L.is_zero()) return std::vector<Scalar>(f.size(), Scalar(0));
    const int r = L.order();
    if (static_cast<int>(f.size()) < r)
        throw domain_error("insufficient data: sequence shorter than the operator order");
    const std::size_t n_out = f.size() - static_cast<std::size_t>(r);

    // Rows of shifted streams: S kind uses f(n+i) directly, F kind the
    // iterated forward differences.
    std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(r) + 1);
    rows[0] = f;
    for (int i = 1; i <= r; ++i) {
        const auto& prev = rows[static_cast<std::size_t>(i - 1)];
        std::vector<Scalar> cur(prev.size() - 1);
        for (std::size_t n = 0; n + 1 < prev.size(); ++n)
            cur[n] = (alg.kind() == AlgKind::S) ? prev[n + 1] : prev[n + 1] - prev[n];
        rows[static_cast<std::size_t>(i)] = std::move(cur);
    }
    std::vector<Scalar> out(n_out, Scalar(0));
    for (std::size_t n = 0; n < n_out; ++n) {
        Scalar acc(0);
        for (int i = 0; i <= r; ++i) {
            const BFrac& c = L.coeff(i);
            if (c.is_zero()) continue;
            acc += c.eval(Scalar(static_cast<long>(n))) * rows[static_cast<std::size_t>(i)][n];
        }
        out[n] = acc;
    }
    return out;
}

} // namespace ore
