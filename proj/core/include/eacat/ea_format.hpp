#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "eacat/effect_algebra.hpp"

namespace eacat {

// "ea v1" model files:
//
//   ea 1                 header, first non-comment line
//   elements <label>...  one or more lines; labels distinct
//   one <label>
//   sum <a> <b> <c>      a ⊕ b = c; the symmetric entry is implied
//
// `#` starts a comment. Any other line is a ParseError carrying its line number.

EffectAlgebra parse_ea(std::istream& in, const std::string& source = "<input>");
EffectAlgebra parse_ea_string(const std::string& text, const std::string& source = "<string>");
EffectAlgebra load_ea_file(const std::string& path);  // "-" reads stdin

/// Writes one orientation per unordered pair, rows in element order.
void write_ea(std::ostream& out, const EffectAlgebra& a);
std::string to_ea_string(const EffectAlgebra& a);

} // namespace eacat
