#pragma once

#include <cstddef>

#include "eacat/effect_algebra.hpp"

namespace eacat {

/// The chain C_n = {0, 1, ..., n} with a ⊕ b = a + b when a + b ≤ n; one = n.
EffectAlgebra chain(std::size_t n);

/// Power set of n atoms (labelled a, b, c, ...), ⊕ = disjoint union; the empty
/// set is labelled "0". n ≤ 12.
EffectAlgebra boolean(std::size_t n);

/// The one-element algebra, 0 ⊕ 0 = 0.
inline EffectAlgebra trivial() { return chain(0); }

} // namespace eacat
