#ifndef ORE_RATIONAL_HPP
#define ORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ore/errors.hpp"

namespace ore {

using Integer = mpz_class;

/// Arbitrary-precision rational number.  Thin value wrapper around
/// mpq_class; always canonical (gcd(|num|, den) = 1, den > 0).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Accepts "a", "a/b" and an optional leading sign, base 10.
    static Rational from_string(std::string_view s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        return Rational(v_.get_den(), v_.get_num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// x^e for integer e; e < 0 requires x != 0.
    Rational pow(long e) const;

    /// Largest integer <= *this.
    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    std::string to_string() const { return v_.get_str(); }

    /// Combined bit size of numerator and denominator; crude growth measure.
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw parse_error("empty number", 0);
    std::string t(s);
    mpq_class v;
    if (v.set_str(t, 10) != 0) throw parse_error("malformed rational '" + t + "'", 0);
    if (v.get_den() == 0) throw domain_error("rational with zero denominator");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

inline Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational out;
    out.v_ = r;
    return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace ore

#endif
