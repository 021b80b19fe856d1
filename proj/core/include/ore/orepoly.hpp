#ifndef ORE_OREPOLY_HPP
#define ORE_OREPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ore/algebra.hpp"
#include "ore/series.hpp"

namespace ore {

/// Element of a univariate Ore algebra: dense coefficient vector over the
/// base ring, index i = coefficient of X^i.  The highest stored coefficient
/// is nonzero; order() of the zero operator is the kNegInfDeg sentinel.
class OrePoly {
public:
    explicit OrePoly(OreAlgebra alg) : alg_(std::move(alg)) {}
    OrePoly(OreAlgebra alg, std::vector<BFrac> coeffs);

    static OrePoly generator(const OreAlgebra& a);
    static OrePoly scalar(const OreAlgebra& a, const BFrac& c);
    /// Builds from a coefficient list, trailing zeros stripped.
    static OrePoly from_coeff_list(const OreAlgebra& a, std::vector<BFrac> coeffs);

    const OreAlgebra& algebra() const { return alg_; }
    const std::vector<BFrac>& coeffs() const { return c_; }
    const BFrac& coeff(int i) const;
    const BFrac& lc() const;

    int order() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Maximum coefficient degree after clearing denominators.
    int degree() const;

    OrePoly operator-() const;
    friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b);
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
    OrePoly& operator+=(const OrePoly& o) { return *this = *this + o; }
    OrePoly& operator-=(const OrePoly& o) { return *this = *this - o; }
    OrePoly& operator*=(const OrePoly& o) { return *this = *this * o; }

    /// Left multiplication by a base-ring element scales every coefficient.
    friend OrePoly operator*(const BFrac& s, const OrePoly& L);
    friend OrePoly operator*(const OrePoly& L, const BFrac& s) {
        return L * OrePoly::scalar(L.algebra(), s);
    }

    OrePoly pow(long e) const;

    friend bool operator==(const OrePoly& a, const OrePoly& b) {
        return a.alg_.same_structure(b.alg_) && a.c_ == b.c_;
    }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    std::string to_string() const; // canonical grammar rendering

private:
    void trim_();
    OreAlgebra alg_;
    std::vector<BFrac> c_;
};

/// Views L in algebra `a`.  Requires the same commutation structure; moving
/// from the fraction-field domain back to polynomials requires every
/// denominator to be a unit.
OrePoly convert(const OrePoly& L, const OreAlgebra& a);

/// Operator with the given exact order, coefficient degrees <= degree and
/// integer coefficients drawn uniformly from [-9, 9] by a fixed-seed engine.
OrePoly random_operator(const OreAlgebra& a, int order, int degree, std::uint64_t seed);

/// L(f) for the built-in actions: D: f', T: x f', S: f(x+1),
/// F: f(x+1) - f, Q: f(qx), J: (f(qx) - f(x)) / ((q-1)x).
BFrac apply(const OrePoly& L, const BFrac& f);
BFrac apply(const OrePoly& L, const BPoly& f);

/// Series action; supported for kinds D, T, Q, J.
TruncSeries apply(const OrePoly& L, const TruncSeries& f);

/// Termwise action on a finite sequence (kinds S and F): returns the
/// length N - order evaluations at n = 0, 1, ...
std::vector<Scalar> apply(const OrePoly& L, const std::vector<Scalar>& f);

/// Common denominator clearing: returns polynomial coefficients p_i and a
/// polynomial d with coeff_i = p_i / d.
std::pair<std::vector<BPoly>, BPoly> clear_denominators(const OrePoly& L);

} // namespace ore

#endif
