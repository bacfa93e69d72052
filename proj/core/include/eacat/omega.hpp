#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eacat/effect_algebra.hpp"
#include "eacat/parallel.hpp"
#include "eacat/report.hpp"

namespace eacat::omega {

/// An n-cell: a nondecreasing sequence of 2n+1 elements, stored with absolute
/// values (the interval [x, y] convention, not the [⊥, y ⊖ x] one).
struct Cell {
  int level = 0;
  std::vector<ElementId> seq;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

Cell make_cell(std::vector<ElementId> seq);  // level inferred from length
std::string to_string(const EffectAlgebra& a, const Cell& c);

/// Enumeration guard: (2n+1)·log2|X| ≤ 24.
bool enumeration_feasible(std::size_t carrier, int level);
/// Multiset coefficient C(|X| + 2n, 2n + 1), the number of weakly increasing
/// words of length 2n+1 over a chain of |X| letters.
std::uint64_t chain_cell_count(std::size_t carrier, int level);

/// The ω-category over a fixed effect algebra. Holds the algebra and its
/// derived D-poset; all operations are pure.
class OmegaCategory {
public:
  explicit OmegaCategory(EffectAlgebra algebra);

  const EffectAlgebra& algebra() const noexcept { return algebra_; }
  const DPoset& dposet() const noexcept { return dposet_; }

  bool is_cell(const Cell& c) const;

  /// Every cell of the given level in lexicographic order of element ids.
  /// Throws GuardError beyond the feasibility guard unless `force`.
  std::vector<Cell> enumerate_cells(int level, bool force = false) const;
  std::uint64_t count_cells(int level, bool force = false) const;

  /// Iterated source / target down to level i < c.level.
  Cell source(const Cell& c, int i) const;
  Cell target(const Cell& c, int i) const;
  /// The same maps obtained by precomposing with the simplex builders.
  Cell source_via_simplex(const Cell& c, int i) const;
  Cell target_via_simplex(const Cell& c, int i) const;

  /// One level up; source and target of the result are c.
  Cell identity(const Cell& c) const;
  /// Iterated identity up to `level` > c.level.
  Cell identity_to(const Cell& c, int level) const;
  Cell identity_via_simplex(const Cell& c) const;

  /// c_base(f, g): f after g along their common base-dimensional boundary.
  /// Throws Error unless f.level == g.level > base and
  /// source(f, base) == target(g, base).
  Cell compose(int base, const Cell& f, const Cell& g) const;
  bool composable(int base, const Cell& f, const Cell& g) const;
  /// k = 1 only: the middle entry computed as (f(n+1) ⊖ g(n+2)) ⊕ g(n+1).
  Cell compose_alternative(int base, const Cell& f, const Cell& g) const;

  std::string label(const Cell& c) const { return to_string(algebra_, c); }

private:
  ElementId minus(ElementId y, ElementId x) const;
  ElementId plus(ElementId a, ElementId b) const;

  EffectAlgebra algebra_;
  DPoset dposet_;
};

/// Exhaustive law suite up to maxLevel: globularity, reflexivity,
/// category laws for every base i < j, boundaries of composites, associativity,
/// well-definedness of composites, agreement with the simplex builders and
/// the alternative middle formula, and interchange for all i < j < k.
AxiomReport verify_omega_laws(const EffectAlgebra& a, int maxLevel, const VerifyOptions& opts = {});

// -- hom algebras and functors -----------------------------------------------

/// The hom-set 𝔹X[x, y] as the interval algebra on [x, y]. Throws unless x ≤ y.
IntervalAlgebra hom_algebra(const EffectAlgebra& a, ElementId x, ElementId y);

/// Composition X_{y,z} × X_{x,y} → X_{x,z}, (f, g) ↦ (f ⊖ y) ⊕ g, as a map of
/// effect algebras on the product of the two hom algebras.
GenMorphism composition_morphism(const EffectAlgebra& a, ElementId x, ElementId y, ElementId z);

/// A generalized D-monotonic map applied cellwise: objects by f, a 1-cell
/// (x, m, y) to (f x, f m, f y).
struct LiftedFunctor {
  GenMorphism morphism;
  Cell apply(const Cell& c) const;
};

/// Hom-set preservation, identities, additivity f(φ ⊕ ψ) = f φ ⊕ f ψ and
/// preservation of composites of 1-cells.
AxiomReport check_functor(const LiftedFunctor& F, const VerifyOptions& opts = {});
LiftedFunctor lift_functor(GenMorphism f);

/// 𝔹(A × B) ≅ 𝔹A × 𝔹B: for every pair of objects the hom-sets are put in
/// bijection by splitting components, and composition and identities agree.
AxiomReport check_monoidality(const EffectAlgebra& a, const EffectAlgebra& b,
                              const VerifyOptions& opts = {});

} // namespace eacat::omega
