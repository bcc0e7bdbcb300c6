#ifndef PADICSPEC_PARSE_HPP
#define PADICSPEC_PARSE_HPP

#include <string>

#include "padicspec/poly.hpp"

namespace padicspec {

/// Parses "T^2-13", "2*T^3 + T - 5", "-T", "7". Grammar:
///   poly := term (("+" | "-") term)*
///   term := coef? ("*"? var ("^" uint)?)?
///   var  := "T"
/// Whitespace is allowed around tokens. Repeated monomials accumulate
/// ("T+T" is 2*T). Throws ParseError with a 0-based position on bad input;
/// exponents above 512 are rejected as a resource guard.
IntPoly parse_poly(const std::string& text);

} // namespace padicspec

#endif
