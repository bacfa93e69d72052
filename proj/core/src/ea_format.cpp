#include "eacat/ea_format.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "eacat/error.hpp"

namespace eacat {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;)
    out.push_back(tok);
  return out;
}

struct PendingSum {
  std::string a, b, c;
  std::size_t line;
};

} // namespace

EffectAlgebra parse_ea(std::istream& in, const std::string& source) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> index;
  std::optional<std::pair<std::string, std::size_t>> one;
  std::vector<PendingSum> sums;
  bool header = false;
  std::size_t lineno = 0;

  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto tok = tokenize(line);
    if (tok.empty())
      continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "ea")
        throw ParseError(source, lineno, "expected header 'ea 1'");
      if (tok[1] != "1")
        throw ParseError(source, lineno, "unsupported ea version '" + tok[1] + "'");
      header = true;
      continue;
    }
    const std::string& kw = tok[0];
    if (kw == "elements") {
      if (tok.size() < 2)
        throw ParseError(source, lineno, "'elements' needs at least one label");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!index.emplace(tok[i], static_cast<std::uint32_t>(names.size())).second)
          throw ParseError(source, lineno, "duplicate element label '" + tok[i] + "'");
        names.push_back(tok[i]);
      }
    } else if (kw == "one") {
      if (tok.size() != 2)
        throw ParseError(source, lineno, "'one' takes exactly one label");
      if (one)
        throw ParseError(source, lineno, "'one' given twice");
      one = {tok[1], lineno};
    } else if (kw == "sum") {
      if (tok.size() != 4)
        throw ParseError(source, lineno, "'sum' takes exactly three labels");
      sums.push_back({tok[1], tok[2], tok[3], lineno});
    } else {
      throw ParseError(source, lineno, "unknown directive '" + kw + "'");
    }
  }

  if (!header)
    throw ParseError(source, lineno == 0 ? 1 : lineno, "missing header 'ea 1'");
  if (names.empty())
    throw ParseError(source, lineno, "no elements declared");
  if (!one)
    throw ParseError(source, lineno, "missing 'one'");

  auto resolve = [&](const std::string& label, std::size_t line) {
    auto it = index.find(label);
    if (it == index.end())
      throw ParseError(source, line, "unknown element '" + label + "'");
    return ElementId{it->second};
  };

  const ElementId unit = resolve(one->first, one->second);
  const std::size_t n = names.size();
  std::vector<std::int32_t> table(n * n, EffectAlgebra::kUndefined);
  for (const PendingSum& s : sums) {
    ElementId a = resolve(s.a, s.line), b = resolve(s.b, s.line), c = resolve(s.c, s.line);
    for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
      std::int32_t& slot = table[static_cast<std::size_t>(p.index) * n + q.index];
      if (slot != EffectAlgebra::kUndefined && slot != static_cast<std::int32_t>(c.index))
        throw ParseError(source, s.line,
                         "conflicting sum for '" + s.a + "' and '" + s.b + "': '" +
                             names[static_cast<std::size_t>(slot)] + "' vs '" + s.c + "'");
      slot = static_cast<std::int32_t>(c.index);
    }
  }
  return EffectAlgebra::from_table(std::move(names), unit, std::move(table));
}

EffectAlgebra parse_ea_string(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_ea(in, source);
}

EffectAlgebra load_ea_file(const std::string& path) {
  if (path == "-")
    return parse_ea(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  return parse_ea(in, path);
}

void write_ea(std::ostream& out, const EffectAlgebra& a) {
  out << "ea 1\n";
  out << "elements";
  for (const auto& name : a.names())
    out << ' ' << name;
  out << '\n';
  out << "one " << a.name(a.one()) << '\n';
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (auto c = a.sum(id(i), id(j)))
        out << "sum " << a.name(id(i)) << ' ' << a.name(id(j)) << ' ' << a.name(*c) << '\n';
}

std::string to_ea_string(const EffectAlgebra& a) {
  std::ostringstream out;
  write_ea(out, a);
  return out.str();
}

} // namespace eacat
