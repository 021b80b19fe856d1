#ifndef ORE_GRAMMAR_HPP
#define ORE_GRAMMAR_HPP

#include <string>

#include "ore/orepoly.hpp"

namespace ore {

/// Parses operator text in the algebra's grammar.  Tokens: INTEGER, the base
/// variable, the generator name, `q`, and `+ - * ^ ( ) /`.  `^` binds tighter
/// than `*` which binds tighter than `+`/`-`; implicit multiplication is not
/// accepted; whitespace is insignificant.  `/` requires an order-0, nonzero
/// divisor; a divisor containing the base variable additionally requires the
/// fraction-field coefficient domain and an order-0 dividend.
OrePoly parse_operator(const std::string& text, const OreAlgebra& a);

/// Canonical rendering: terms in decreasing generator power, zero
/// coefficients omitted, coefficient 1 elided before the generator,
/// composite coefficients parenthesized.  parse(format(L)) == L.
std::string format_operator(const OrePoly& L);

std::string scalar_to_string(const Scalar& s);
std::string bpoly_to_string(const BPoly& p, const std::string& var);
std::string bfrac_to_string(const BFrac& f, const std::string& var);

} // namespace ore

#endif
