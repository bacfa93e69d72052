#include "eacat/mat_format.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "eacat/error.hpp"

namespace eacat {

namespace {

Rational parse_rational(const std::string& num, const std::string& den) {
  boost::multiprecision::cpp_int n(num), d(den.empty() ? "1" : den);
  if (d == 0)
    throw Error("zero denominator");
  return Rational(n, d);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; ss >> t;)
    out.push_back(t);
  return out;
}

} // namespace

ComplexRational parse_entry(const std::string& token) {
  static const std::regex full(R"(([+-]?\d+)(?:/(\d+))?(?:([+-])(\d+)?(?:/(\d+))?i)?)");
  static const std::regex imag(R"(([+-]?)(\d+)?(?:/(\d+))?i)");
  std::smatch m;
  if (std::regex_match(token, m, full)) {
    Rational re = parse_rational(m[1].str(), m[2].str());
    Rational im = 0;
    if (m[3].matched) {
      if (!m[4].matched && m[5].matched)
        throw Error("malformed entry '" + token + "'");
      im = parse_rational(m[4].matched ? m[4].str() : "1", m[5].str());
      if (m[3].str() == "-")
        im = -im;
    }
    return {re, im};
  }
  if (std::regex_match(token, m, imag)) {
    if (!m[2].matched && m[3].matched)
      throw Error("malformed entry '" + token + "'");
    Rational im = parse_rational(m[2].matched ? m[2].str() : "1", m[3].str());
    if (m[1].str() == "-")
      im = -im;
    return {0, im};
  }
  throw Error("malformed entry '" + token + "'");
}

std::vector<RatMatrix> parse_mat(std::istream& in, const std::string& source) {
  std::vector<RatMatrix> out;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty())
      continue;
    if (!header) {
      if (t.size() != 2 || t[0] != "mat" || t[1] != "1")
        throw ParseError(source, lineno, "expected header 'mat 1'");
      header = true;
      continue;
    }
    if (t[0] != "matrix" || t.size() != 2)
      throw ParseError(source, lineno, "expected 'matrix <dim>'");
    std::size_t dim = 0;
    try {
      std::size_t used = 0;
      long v = std::stol(t[1], &used);
      if (used != t[1].size() || v <= 0)
        throw Error("");
      dim = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError(source, lineno, "bad dimension '" + t[1] + "'");
    }
    RatMatrix m(dim);
    for (std::size_t r = 0; r < dim;) {
      if (!std::getline(in, line))
        throw ParseError(source, lineno, "matrix ends after " + std::to_string(r) + " rows");
      ++lineno;
      auto row = tokens(line);
      if (row.empty())
        continue;
      if (row.size() != dim)
        throw ParseError(source, lineno,
                         "expected " + std::to_string(dim) + " entries, got " + std::to_string(row.size()));
      for (std::size_t c = 0; c < dim; ++c) {
        try {
          m(r, c) = parse_entry(row[c]);
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(source, lineno, e.what());
        }
      }
      ++r;
    }
    out.push_back(std::move(m));
  }
  if (!header)
    throw ParseError(source, lineno, "missing header 'mat 1'");
  return out;
}

std::vector<RatMatrix> parse_mat_string(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_mat(in, source);
}

std::vector<RatMatrix> load_mat_file(const std::string& path) {
  if (path == "-")
    return parse_mat(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  return parse_mat(in, path);
}

void write_mat(std::ostream& out, const std::vector<RatMatrix>& ms) {
  out << "mat 1\n";
  for (const RatMatrix& m : ms) {
    out << "matrix " << m.dim() << '\n';
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c)
        out << (c ? " " : "") << to_string(m(r, c));
      out << '\n';
    }
  }
}

} // namespace eacat
