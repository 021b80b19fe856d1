#ifndef ORE_SCALAR_HPP
#define ORE_SCALAR_HPP

#include <string>
#include <variant>

#include "ore/ratfun.hpp"
#include "ore/rational.hpp"

namespace ore {

/// Rational-coefficient polynomials and fractions; reused both as plain
/// Q[x]-style scratch polynomials and as elements of Q(q).
using RPoly = Poly<Rational>;
using RFrac = RatFun<Rational>;

/// Which constant field an algebra works over.
enum class ConstKind { Rationals, RatFunInQ };

/// One element of the constant field: a plain rational, or a rational
/// function in the parameter q.  Canonical form: a q-fraction that is
/// actually constant collapses to the Rational alternative.
class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(int n) : v_(Rational(n)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(RFrac f) : v_(std::move(f)) { demote_(); }

    /// The indeterminate q itself.
    static Scalar q() { return Scalar(RFrac::var()); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rat() const { return std::get<Rational>(v_); }
    const RFrac& qfrac() const { return std::get<RFrac>(v_); }
    RFrac to_qfrac() const { return is_rational() ? RFrac(rat()) : qfrac(); }

    bool is_zero() const { return is_rational() ? rat().is_zero() : false; }
    bool is_one() const { return is_rational() && rat().is_one(); }

    Scalar operator-() const {
        return is_rational() ? Scalar(-rat()) : Scalar(-qfrac());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.rat() + b.rat());
        return Scalar(a.to_qfrac() + b.to_qfrac());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.rat() - b.rat());
        return Scalar(a.to_qfrac() - b.to_qfrac());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.rat() * b.rat());
        return Scalar(a.to_qfrac() * b.to_qfrac());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw domain_error("scalar division by zero");
        if (a.is_rational() && b.is_rational()) return Scalar(a.rat() / b.rat());
        return Scalar(a.to_qfrac() / b.to_qfrac());
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_rational() != b.is_rational()) return false;
        return a.is_rational() ? a.rat() == b.rat() : a.qfrac() == b.qfrac();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        if (is_zero()) throw domain_error("inverse of zero scalar");
        return is_rational() ? Scalar(rat().inverse()) : Scalar(qfrac().inverse());
    }

    Scalar pow(long e) const;

    std::size_t bit_size() const;
    std::string to_string() const;

private:
    void demote_() {
        if (!is_rational() && qfrac().is_constant()) {
            Rational r = qfrac().num().coeff(0); // copy before the variant flips
            v_ = std::move(r);
        }
    }
    std::variant<Rational, RFrac> v_;
};

/// Base-ring polynomial / rational function in the algebra variable.
using BPoly = Poly<Scalar>;
using BFrac = RatFun<Scalar>;

/// Fast gcd for Scalar-coefficient polynomials: when both operands have
/// plain rational coefficients the computation runs as a primitive PRS
/// over the integers.  Preferred over the generic template by overload
/// resolution.
BPoly poly_gcd(const BPoly& a, const BPoly& b);

bool bpoly_all_rational(const BPoly& p);
BPoly bpoly_from_rpoly(const RPoly& p);
RPoly bpoly_to_rpoly(const BPoly& p); // throws if a coefficient involves q

} // namespace ore

#endif
