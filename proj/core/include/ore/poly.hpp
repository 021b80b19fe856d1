#ifndef ORE_POLY_HPP
#define ORE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ore/errors.hpp"

namespace ore {

/// degree() of the zero polynomial; compares below every real degree.
inline constexpr int kNegInfDeg = -0x40000000;

/// Dense univariate polynomial over a field K, lowest power first.
/// Invariant: the highest stored coefficient is nonzero (zero poly stores
/// nothing).  K needs value semantics, field operators and is_zero().
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(const K& c) { if (!c.is_zero()) c_.push_back(c); }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim_(); }

    static Poly var() { return monomial(K(1), 1); }

    static Poly monomial(const K& c, int power) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(power) + 1, K());
            p.c_.back() = c;
        }
        return p;
    }

    int degree() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const K& coeff(int i) const {
        static const K zero{};
        return (i < 0 || i >= static_cast<int>(c_.size())) ? zero : c_[static_cast<std::size_t>(i)];
    }
    const K& lc() const {
        if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    void set_coeff(int i, const K& v) {
        if (i >= static_cast<int>(c_.size())) {
            if (v.is_zero()) return;
            c_.resize(static_cast<std::size_t>(i) + 1, K());
        }
        c_[static_cast<std::size_t>(i)] = v;
        trim_();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim_();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim_();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim_();
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const K& s, Poly p) {
        for (auto& c : p.c_) c = s * c;
        p.trim_();
        return p;
    }
    friend Poly operator*(const Poly& p, const K& s) { return s * p; }

    Poly scaled(const K& s) const { return s * *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Shift coefficients upward: multiply by x^k.
    Poly shifted_up(int k) const {
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + static_cast<std::size_t>(k), K());
        std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
        return r;
    }

    K eval(const K& x) const {
        K acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        Poly r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = K(static_cast<long>(i)) * c_[i];
        r.trim_();
        return r;
    }

    /// Number of trailing zero coefficients; degree+1 of x-power dividing us.
    int valuation() const {
        if (is_zero()) return kNegInfDeg;
        int v = 0;
        while (c_[static_cast<std::size_t>(v)].is_zero()) ++v;
        return v;
    }

private:
    void trim_() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Quotient and remainder of the field-coefficient long division a = q*b + r.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    std::vector<K> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const K& blc = b.lc();
    std::vector<K> quo(static_cast<std::size_t>(a.degree() - db) + 1, K());
    for (int i = a.degree(); i >= db; --i) {
        K c = rem[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        K q = c / blc;
        quo[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
        rem[static_cast<std::size_t>(i)] = K();
    }
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> poly_div_exact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw domain_error("inexact polynomial division");
    return q;
}

template <class K>
Poly<K> poly_monic(const Poly<K>& p) {
    if (p.is_zero()) return p;
    return (K(1) / p.lc()) * p;
}

/// Monic Euclidean gcd.  Overload resolution picks a faster non-template
/// version for specific coefficient fields where one is provided.
template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = poly_divrem(x, y);
        (void)q;
        x = std::move(y);
        y = poly_monic(r);
    }
    return poly_monic(x);
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, long e) {
    if (e < 0) throw domain_error("negative polynomial power");
    Poly<K> acc(K(1)), base = p;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

/// f(g): substitute g for the variable of f.
template <class K>
Poly<K> poly_compose(const Poly<K>& f, const Poly<K>& g) {
    Poly<K> acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * g;
        acc += Poly<K>(f.coeff(i));
    }
    return acc;
}

} // namespace ore

#endif
