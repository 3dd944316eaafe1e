// Text grammars for the command line.
//
//   tuple       "7/2,5/2,1/2"            exact rationals, comma separated
//   int list    "2,4"
//   center      "1,1;1,0"                vectors separated by ';'
//   factors     "sl(3)+sp(4)"            sl, so, sp, gl, e6, g2 with the
//                                         natural dimension in parentheses
//   module      "sl(3)+sp(4) on C3+C4"   summands separated by '+', tensor
//               "gl(4) on wedge2"        factors by 'x'; a part is nat,
//               "sl(2)+sl(3) on nat(1)xnat(2)"  dual, sym2, wedge2, spin or
//                                         spin- with an optional 1-based
//                                         factor index (required with
//                                         several factors), C<n> is the
//                                         natural module of the next unused
//                                         factor of dimension n, and C is
//                                         the trivial module.  Without "on"
//                                         every factor acts on its natural
//                                         module.
//   monodromy   "1/3" or "generic"
#ifndef LIEFLAG_PARSE_HPP
#define LIEFLAG_PARSE_HPP

#include "lieflag/lie_catalog.hpp"
#include "lieflag/spherical_table.hpp"
#include "lieflag/tuples_weights.hpp"

#include <string>
#include <vector>

namespace lieflag {

/// All parsers throw ParseError on malformed input.
RationalTuple parse_tuple(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
CenterVectors parse_center(const std::string& text);
Factor parse_factor(const std::string& text);
std::vector<Factor> parse_factors(const std::string& text);
ModuleSpec parse_module(const std::string& text);
MonodromyClass parse_monodromy(const std::string& text);

}  // namespace lieflag

#endif  // LIEFLAG_PARSE_HPP
