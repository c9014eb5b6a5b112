#pragma once

#include <string>
#include <string_view>

#include "padicgamma/diffpoly.hpp"

namespace padicgamma {

// Grammar for differential polynomials: terms joined by + and -; factors are
// integer/rational literals ("3", "5/2"), X^j, Yk^a, and parenthesized
// X-polynomials; * is explicit; whitespace insignificant. Example:
//   (X^2+1)*Y0^2*Y1 + 3*Y2
// Throws syntax_error with the byte offset of the offending token, and
// order_exceeded when a Y index is beyond max_order.
DifferentialPolynomial parse_diffpoly(std::string_view text, std::uint32_t max_order = 16);

// Canonical text: terms antilex-descending, coefficient first (parenthesized
// when it has several X-terms), explicit * and ^, Y factors by ascending
// index. parse_diffpoly(format_diffpoly(P)) == P.
std::string format_diffpoly(const DifferentialPolynomial& P);

} // namespace padicgamma
