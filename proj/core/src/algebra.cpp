#include "ore/algebra.hpp"

#include <cctype>

namespace ore {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

bool scalar_uses_q(const Scalar& s) { return !s.is_rational(); }

bool bfrac_uses_q(const BFrac& f) {
    for (const auto& c : f.num().coeffs())
        if (scalar_uses_q(c)) return true;
    for (const auto& c : f.den().coeffs())
        if (scalar_uses_q(c)) return true;
    return false;
}

BFrac var_plus(long k) {
    std::vector<Scalar> cs{Scalar(k), Scalar(1)};
    return BFrac(BPoly(std::move(cs)));
}

} // namespace

std::string to_string(AlgKind k) {
    switch (k) {
        case AlgKind::D: return "D";
        case AlgKind::S: return "S";
        case AlgKind::T: return "T";
        case AlgKind::F: return "F";
        case AlgKind::Q: return "Q";
        case AlgKind::J: return "J";
        case AlgKind::Custom: return "custom";
    }
    return "?";
}

OreAlgebra OreAlgebra::make(std::string base_var, std::string gen_name, AlgKind kind,
                            CoeffDomain domain, std::optional<Scalar> q,
                            std::optional<BFrac> custom_sigma,
                            std::optional<BFrac> custom_delta) {
    if (!valid_identifier(base_var) || base_var == "q")
        throw domain_error("invalid base variable name '" + base_var + "'");
    if (!valid_identifier(gen_name) || gen_name == "q" || gen_name == base_var)
        throw domain_error("invalid generator name '" + gen_name + "'");

    OreAlgebra a;
    a.base_var_ = std::move(base_var);
    a.gen_name_ = std::move(gen_name);
    a.kind_ = kind;
    a.domain_ = domain;
    a.q_ = std::move(q);

    const BFrac x = BFrac::var();
    const BFrac one{Scalar(1)};
    const BFrac zero{};

    switch (kind) {
        case AlgKind::D:
            a.sigma_ = x;
            a.delta_ = one;
            break;
        case AlgKind::S:
            a.sigma_ = var_plus(1);
            a.delta_ = zero;
            break;
        case AlgKind::T:
            a.sigma_ = x;
            a.delta_ = x;
            break;
        case AlgKind::F:
            a.sigma_ = var_plus(1);
            a.delta_ = one;
            break;
        case AlgKind::Q:
        case AlgKind::J: {
            if (!a.q_) throw domain_error("q-kind algebra requires the parameter q");
            if (a.q_->is_zero()) throw domain_error("q must be invertible");
            a.sigma_ = BFrac(BPoly::monomial(*a.q_, 1));
            a.delta_ = (kind == AlgKind::Q) ? zero : one;
            break;
        }
        case AlgKind::Custom: {
            if (!custom_sigma || !custom_delta)
                throw domain_error("custom algebra requires both sigma and delta images");
            if (custom_sigma->is_constant() || custom_sigma->is_zero())
                throw domain_error("sigma image must be nonconstant");
            a.sigma_ = *custom_sigma;
            a.delta_ = *custom_delta;
            break;
        }
    }

    bool uses_q = (a.q_ && scalar_uses_q(*a.q_)) || bfrac_uses_q(a.sigma_) || bfrac_uses_q(a.delta_);
    a.const_kind_ = uses_q ? ConstKind::RatFunInQ : ConstKind::Rationals;
    return a;
}

OreAlgebra OreAlgebra::from_generator_name(const std::string& gen_name, CoeffDomain domain,
                                           std::optional<Scalar> q) {
    if (gen_name.size() < 2)
        throw domain_error("generator name '" + gen_name + "' has no base variable suffix");
    AlgKind kind;
    switch (gen_name[0]) {
        case 'D': kind = AlgKind::D; break;
        case 'S': kind = AlgKind::S; break;
        case 'T': kind = AlgKind::T; break;
        case 'F': kind = AlgKind::F; break;
        case 'Q': kind = AlgKind::Q; break;
        case 'J': kind = AlgKind::J; break;
        default:
            throw domain_error("generator prefix '" + gen_name.substr(0, 1) +
                               "' does not name a built-in kind");
    }
    if ((kind == AlgKind::Q || kind == AlgKind::J) && !q) q = Scalar::q();
    return make(gen_name.substr(1), gen_name, kind, domain, std::move(q));
}

const Scalar& OreAlgebra::q() const {
    if (!q_) throw domain_error("algebra has no parameter q");
    return *q_;
}

bool OreAlgebra::same_structure(const OreAlgebra& o) const {
    return kind_ == o.kind_ && base_var_ == o.base_var_ && gen_name_ == o.gen_name_ &&
           q_ == o.q_ && sigma_ == o.sigma_ && delta_ == o.delta_;
}

OreAlgebra OreAlgebra::with_domain(CoeffDomain d) const {
    OreAlgebra a = *this;
    a.domain_ = d;
    return a;
}

BFrac OreAlgebra::sigma_var(long k) const {
    if (k == 0) return BFrac::var();
    switch (kind_) {
        case AlgKind::D:
        case AlgKind::T:
            return BFrac::var();
        case AlgKind::S:
        case AlgKind::F:
            return var_plus(k);
        case AlgKind::Q:
        case AlgKind::J:
            return BFrac(BPoly::monomial(q_->pow(k), 1));
        case AlgKind::Custom: {
            if (k < 0) throw unsupported_error("custom sigma is not invertible");
            BFrac img = sigma_;
            for (long i = 1; i < k; ++i) img = ratfun_eval_ratfun(img, sigma_);
            return img;
        }
    }
    throw unsupported_error("unreachable");
}

BFrac OreAlgebra::sigma_pow(const BFrac& f, long k) const {
    if (k == 0 || f.is_constant()) return f;
    return ratfun_eval_ratfun(f, sigma_var(k));
}

BPoly OreAlgebra::sigma(const BPoly& p) const { return sigma_pow(p, 1); }

BPoly OreAlgebra::sigma_pow(const BPoly& p, long k) const {
    if (k == 0 || p.is_constant()) return p;
    BFrac img = sigma_var(k);
    if (img.is_polynomial()) {
        BPoly acc;
        for (int i = p.degree(); i >= 0; --i) {
            acc = acc * img.num();
            acc += BPoly(p.coeff(i));
        }
        return acc;
    }
    BFrac r = poly_eval_ratfun(p, img);
    if (!r.is_polynomial())
        throw domain_error("sigma image of polynomial is not polynomial");
    return r.num();
}

BFrac OreAlgebra::delta(const BFrac& f) const {
    if (delta_.is_zero()) return BFrac(); // delta(x)=0 extends to zero everywhere
    if (f.is_constant()) return BFrac();

    // delta on a polynomial via delta(x^{k+1}) = delta(x) x^k + sigma(x) delta(x^k).
    auto delta_poly = [&](const BPoly& p) -> BFrac {
        int d = p.degree();
        BFrac acc;
        if (d < 1) return acc;
        std::vector<BFrac> dpow(static_cast<std::size_t>(d) + 1);
        dpow[0] = BFrac();
        BFrac xfrac = BFrac::var();
        BFrac xpow{Scalar(1)};
        for (int k = 1; k <= d; ++k) {
            // xpow is x^{k-1} here
            dpow[static_cast<std::size_t>(k)] =
                delta_ * xpow + sigma_ * dpow[static_cast<std::size_t>(k - 1)];
            xpow = xpow * xfrac;
        }
        for (int k = 1; k <= d; ++k) {
            if (p.coeff(k).is_zero()) continue;
            acc += BFrac(p.coeff(k)) * dpow[static_cast<std::size_t>(k)];
        }
        return acc;
    };

    if (f.is_polynomial()) return delta_poly(f.num());
    // Skew quotient rule: delta(a/b) = (delta(a) sigma(b) - sigma(a) delta(b)) / (sigma(b) b).
    BFrac a{f.num()}, b{f.den()};
    BFrac sa = sigma(a), sb = sigma(b);
    return (delta_poly(f.num()) * sb - sa * delta_poly(f.den())) / (sb * b);
}

} // namespace ore
