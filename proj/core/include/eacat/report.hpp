#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace eacat {

enum class Verdict { Pass, Fail, Refused };

using Witness = std::vector<std::string>;

struct Check {
  std::string id;
  Verdict verdict = Verdict::Pass;
  Witness witness;   // non-empty on Fail
  std::string note;  // reason on Refused
};

/// Ordered list of named checks produced by a verifier.
///
/// A failing check always names the elements (or cells) that violate it.
/// Checks appear in the order the verifier ran them, so two runs over the same
/// input print identical reports.
class AxiomReport {
public:
  void pass(std::string id);
  void fail(std::string id, Witness witness);
  void refuse(std::string id, std::string reason);
  // pass when `counterexample` is empty, fail with it otherwise
  void record(std::string id, std::optional<Witness> counterexample);
  void append(const AxiomReport& other, std::string_view prefix = {});

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check* find(std::string_view id) const;
  bool passed(std::string_view id) const;

  bool all_passed() const;
  std::size_t count(Verdict v) const;
  bool empty() const noexcept { return checks_.empty(); }

  // One line per check: `PASS id`, `FAIL id witness: ...`, `REFUSED id reason`.
  void print(std::ostream& os) const;
  void print_terse(std::ostream& os) const;

private:
  std::vector<Check> checks_;
};

std::string format_witness(const Witness& w);

} // namespace eacat
