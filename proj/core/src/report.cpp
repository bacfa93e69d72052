#include "eacat/report.hpp"

#include <algorithm>
#include <cassert>

namespace eacat {

void AxiomReport::pass(std::string id) {
  checks_.push_back({std::move(id), Verdict::Pass, {}, {}});
}

void AxiomReport::fail(std::string id, Witness witness) {
  assert(!witness.empty());
  checks_.push_back({std::move(id), Verdict::Fail, std::move(witness), {}});
}

void AxiomReport::refuse(std::string id, std::string reason) {
  checks_.push_back({std::move(id), Verdict::Refused, {}, std::move(reason)});
}

void AxiomReport::record(std::string id, std::optional<Witness> counterexample) {
  if (counterexample)
    fail(std::move(id), std::move(*counterexample));
  else
    pass(std::move(id));
}

void AxiomReport::append(const AxiomReport& other, std::string_view prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty())
      c.id = std::string(prefix) + c.id;
    checks_.push_back(std::move(c));
  }
}

const Check* AxiomReport::find(std::string_view id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

bool AxiomReport::passed(std::string_view id) const {
  const Check* c = find(id);
  return c != nullptr && c->verdict == Verdict::Pass;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.verdict == Verdict::Pass; });
}

std::size_t AxiomReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [v](const Check& c) { return c.verdict == v; }));
}

std::string format_witness(const Witness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0)
      out += ' ';
    out += w[i];
  }
  return out;
}

void AxiomReport::print(std::ostream& os) const {
  for (const Check& c : checks_) {
    switch (c.verdict) {
    case Verdict::Pass:
      os << "PASS " << c.id << '\n';
      break;
    case Verdict::Fail:
      os << "FAIL " << c.id << " witness: " << format_witness(c.witness) << '\n';
      break;
    case Verdict::Refused:
      os << "REFUSED " << c.id << ' ' << c.note << '\n';
      break;
    }
  }
}

void AxiomReport::print_terse(std::ostream& os) const {
  os << "passed " << count(Verdict::Pass) << " failed " << count(Verdict::Fail)
     << " refused " << count(Verdict::Refused) << '\n';
}

} // namespace eacat
