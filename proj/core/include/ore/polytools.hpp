#ifndef ORE_POLYTOOLS_HPP
#define ORE_POLYTOOLS_HPP

#include <string>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

// Integer polynomial scratch layer (dense, trailing zeros trimmed).
using ZPoly = std::vector<Integer>;

int zp_degree(const ZPoly& p);
void zp_trim(ZPoly& p);
Integer zp_content(const ZPoly& p);
ZPoly zp_primitive(const ZPoly& p);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
/// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a modulo b.
ZPoly zp_prem(const ZPoly& a, const ZPoly& b);
/// Primitive gcd via primitive polynomial remainder sequence.
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);

/// Clears denominators and integer content of a rational-coefficient
/// polynomial; the result is primitive with positive leading coefficient.
ZPoly rpoly_to_zz_primitive(const RPoly& p);
RPoly rpoly_from_zz(const ZPoly& p);

/// f(x + c)
RPoly rpoly_shift(const RPoly& f, const Rational& c);

/// Resultant of two rational-coefficient polynomials.
Rational resultant(const RPoly& f, const RPoly& g);

/// All integer roots, ascending.  p must be nonzero.
std::vector<Integer> integer_roots(const RPoly& p);

/// All integers h >= 0 such that gcd(A(x + h), B(x)) is nonconstant,
/// ascending (the "dispersion set").  A, B nonzero.
std::vector<Integer> shift_coincidences(const RPoly& A, const RPoly& B);

/// Squarefree decomposition by Yun's algorithm: returns f1, f2, ... with
/// p = c * prod fi^i, each fi squarefree and monic, pairwise coprime.
std::vector<RPoly> squarefree_decomposition(const RPoly& p);

/// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
RPoly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// "2*x^2 - x + 1" style rendering, descending powers.
std::string rpoly_to_string(const RPoly& p, const std::string& var);

} // namespace ore

#endif
