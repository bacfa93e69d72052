#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "eacat/rat_matrix.hpp"

namespace eacat {

// "mat v1" seed files:
//
//   mat 1
//   matrix <dim>
//   <dim entries>     repeated dim times
//   ...
//
// Entries are `a`, `a/b`, `a/b+c/di`, `a/b-c/di` or a bare imaginary `c/di`.
// `#` starts a comment. Errors carry the line number.

std::vector<RatMatrix> parse_mat(std::istream& in, const std::string& source = "<input>");
std::vector<RatMatrix> parse_mat_string(const std::string& text, const std::string& source = "<string>");
std::vector<RatMatrix> load_mat_file(const std::string& path);  // "-" reads stdin

/// Parses a single entry; throws Error if malformed.
ComplexRational parse_entry(const std::string& token);

void write_mat(std::ostream& out, const std::vector<RatMatrix>& ms);

} // namespace eacat
