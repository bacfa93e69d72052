#include "eacat/generators.hpp"

#include <string>
#include <vector>

#include "eacat/error.hpp"

namespace eacat {

EffectAlgebra chain(std::size_t n) {
  if (n + 1 > kExhaustiveCarrierCap)
    throw GuardError("chain length above carrier cap");
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i)
    names.push_back(std::to_string(i));
  std::vector<SumEntry> sums;
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = a; a + b <= n; ++b)
      sums.push_back({id(a), id(b), id(a + b)});
  return EffectAlgebra::from_sums(std::move(names), id(n), sums);
}

EffectAlgebra boolean(std::size_t n) {
  if (n > 12)
    throw GuardError("boolean algebra limited to 12 atoms");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < size; ++mask) {
    std::string label;
    for (std::size_t bit = 0; bit < n; ++bit)
      if (mask & (std::size_t{1} << bit))
        label += static_cast<char>('a' + bit);
    names.push_back(label.empty() ? "0" : label);
  }
  std::vector<SumEntry> sums;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a; b < size; ++b)
      if ((a & b) == 0)
        sums.push_back({id(a), id(b), id(a | b)});
  return EffectAlgebra::from_sums(std::move(names), id(size - 1), sums);
}

} // namespace eacat
