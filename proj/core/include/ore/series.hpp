#ifndef ORE_SERIES_HPP
#define ORE_SERIES_HPP

#include <string>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

/// Truncated power series at the origin: sum of c[m] x^m plus O(x^prec).
class TruncSeries {
public:
    TruncSeries() : prec_(0) {}
    TruncSeries(std::vector<Scalar> coeffs, int prec);
    static TruncSeries from_poly(const BPoly& p, int prec);

    int precision() const { return prec_; }
    bool is_zero() const { return c_.empty(); }

    /// m must be below the precision; coefficients past the stored tail are 0.
    const Scalar& coeff(int m) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient (kNegInfDeg for zero series).
    int valuation() const;

    TruncSeries truncated(int prec) const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    TruncSeries operator-() const;
    TruncSeries scaled(const Scalar& s) const;

    /// Product with a polynomial, truncated to our precision.
    TruncSeries mul_poly(const BPoly& p) const;
    /// Division by a polynomial with p(0) != 0, to our precision.
    TruncSeries div_poly(const BPoly& p) const;

    TruncSeries derivative() const;          // precision drops by one
    TruncSeries euler() const;               // x * d/dx, precision kept
    TruncSeries scale_var(const Scalar& q) const;    // x -> q x
    TruncSeries jackson(const Scalar& q) const;      // (f(qx) - f(x)) / ((q-1) x)

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.prec_ == b.prec_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string to_string(const std::string& var) const;

private:
    void trim_();
    std::vector<Scalar> c_;
    int prec_;
};

} // namespace ore

#endif
