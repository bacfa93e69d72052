#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eacat/effect_algebra.hpp"
#include "eacat/rat_matrix.hpp"

namespace eacat {

enum class ModelKind { Projection, Bounded };

/// P + Q when it is again a projection. Throws Error unless P and Q are
/// projections of the same dimension.
std::optional<RatMatrix> proj_oplus(const RatMatrix& p, const RatMatrix& q);

/// 0 ≤ M ≤ Id, both sides decided by is_psd.
bool is_effect(const RatMatrix& m);
/// P + Q when 0 ≤ P + Q ≤ Id. Throws Error unless P and Q are effects.
std::optional<RatMatrix> bound_oplus(const RatMatrix& p, const RatMatrix& q);

struct EffectModel {
  ModelKind kind = ModelKind::Projection;
  std::size_t dim = 0;
  std::vector<RatMatrix> elements;  // indexed like the algebra's carrier
  EffectAlgebra algebra;
};

inline constexpr std::size_t kClosureCap = 10000;

/// Closes {0, Id} ∪ seeds under the partial sum of `kind` and under
/// M ↦ Id - M. Element order is discovery order of a breadth-first worklist;
/// 0 is labelled "0", Id "1", everything else by its matrix. Throws Error on
/// invalid seeds and GuardError when the closure exceeds `cap` elements.
EffectModel extract_algebra(const std::vector<RatMatrix>& seeds, ModelKind kind, std::size_t dim,
                            std::size_t cap = kClosureCap);

/// a ⊕ a defined only for a = 0. Check id `orthoalgebra`.
AxiomReport check_orthoalgebra(const EffectAlgebra& a);

/// Every interval [0, a] is an orthoalgebra under its own structure, is closed
/// under the ambient sum, and its involution is b ↦ a ⊖ b.
AxiomReport check_interval_suborthoalgebra(const EffectAlgebra& a, const VerifyOptions& opts = {});

/// For every chain x ≤ f ≤ y ≤ g ≤ z, with m := (g ⊖ y) ⊕ f, the square
/// f ≤ y, f ≤ m, y ≤ g, m ≤ g is a pullback in the order on [f, g].
AxiomReport check_pullback_theorem(const EffectAlgebra& a, const VerifyOptions& opts = {});

} // namespace eacat
