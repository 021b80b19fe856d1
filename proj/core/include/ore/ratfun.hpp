#ifndef ORE_RATFUN_HPP
#define ORE_RATFUN_HPP

#include <utility>

#include "ore/poly.hpp"

namespace ore {

/// Reduced fraction of two Poly<K>.  Invariants: den != 0, gcd(num, den) = 1,
/// den monic.
template <class K>
class RatFun {
public:
    RatFun() : den_(Poly<K>(K(1))) {}
    RatFun(const K& c) : num_(Poly<K>(c)), den_(Poly<K>(K(1))) {}
    RatFun(Poly<K> num) : num_(std::move(num)), den_(Poly<K>(K(1))) {}
    RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw domain_error("rational function with zero denominator");
        reduce_();
    }

    static RatFun var() { return RatFun(Poly<K>::var()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw domain_error("rational function division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const {
        if (is_zero()) throw domain_error("inverse of zero rational function");
        return RatFun(den_, num_);
    }

    /// Quotient-rule derivative, for the d/dx action.
    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw domain_error("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

private:
    void reduce_() {
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
        if (!den_.lc().is_one()) {
            K s = K(1) / den_.lc();
            num_ = s * num_;
            den_ = s * den_;
        }
    }

    Poly<K> num_, den_;
};

/// f(a) for a polynomial f and rational-function argument a.
template <class K>
RatFun<K> poly_eval_ratfun(const Poly<K>& f, const RatFun<K>& a) {
    RatFun<K> acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        acc += RatFun<K>(f.coeff(i));
    }
    return acc;
}

/// f(a) for rational f = p/q: p(a)/q(a).  q(a) vanishes only if a is a
/// constant root of q, which reduce() rules out for nonconstant a.
template <class K>
RatFun<K> ratfun_eval_ratfun(const RatFun<K>& f, const RatFun<K>& a) {
    RatFun<K> n = poly_eval_ratfun(f.num(), a);
    RatFun<K> d = poly_eval_ratfun(f.den(), a);
    if (d.is_zero()) throw domain_error("substitution hits a pole");
    return n / d;
}

} // namespace ore

#endif
