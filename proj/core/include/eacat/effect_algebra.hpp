#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eacat/parallel.hpp"
#include "eacat/report.hpp"

namespace eacat {

/// Position of an element in its owning carrier. Labels are only for I/O.
struct ElementId {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const ElementId&) const = default;
};

constexpr ElementId id(std::size_t i) { return ElementId{static_cast<std::uint32_t>(i)}; }

/// Exhaustive verifiers refuse carriers above this size unless forced.
inline constexpr std::size_t kExhaustiveCarrierCap = 4096;

/// `a ⊕ b = c`, one orientation; the symmetric entry is implied.
struct SumEntry {
  ElementId a, b, c;
};

/// A finite partial commutative monoid with a distinguished unit, i.e. a
/// candidate effect algebra. Validity is checked by check_effect_axioms, not
/// enforced on construction, so malformed tables can be represented and
/// reported on.
class EffectAlgebra {
public:
  static constexpr std::int32_t kUndefined = -1;

  EffectAlgebra() = default;

  /// Builds the sum table from one-orientation entries, applying the symmetric
  /// closure. Throws Error on duplicate labels, out-of-range ids or two entries
  /// that disagree on the same unordered pair.
  static EffectAlgebra from_sums(std::vector<std::string> names, ElementId one,
                                 std::span<const SumEntry> sums);

  /// Takes a dense row-major table verbatim (kUndefined for "not defined"),
  /// without symmetrizing.
  static EffectAlgebra from_table(std::vector<std::string> names, ElementId one,
                                  std::vector<std::int32_t> table);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ElementId e) const { return names_[e.index]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view label) const;

  ElementId one() const noexcept { return one_; }

  std::int32_t sum_raw(ElementId a, ElementId b) const noexcept {
    return table_[static_cast<std::size_t>(a.index) * names_.size() + b.index];
  }
  bool defined(ElementId a, ElementId b) const noexcept { return sum_raw(a, b) != kUndefined; }
  std::optional<ElementId> sum(ElementId a, ElementId b) const noexcept {
    auto v = sum_raw(a, b);
    if (v == kUndefined)
      return std::nullopt;
    return id(static_cast<std::size_t>(v));
  }

  /// The unique b with a ⊕ b = 1, if there is exactly one.
  std::optional<ElementId> try_dagger(ElementId a) const noexcept;
  /// As try_dagger, but throws Error when a has no unique orthosupplement.
  ElementId dagger(ElementId a) const;
  /// 1†; never stored.
  ElementId zero() const { return dagger(one_); }

  const std::vector<std::int32_t>& table() const noexcept { return table_; }

  /// Same carrier size, unit and sum table. Labels are ignored.
  bool same_structure(const EffectAlgebra& other) const noexcept {
    return one_ == other.one_ && table_ == other.table_;
  }

private:
  EffectAlgebra(std::vector<std::string> names, ElementId one, std::vector<std::int32_t> table);

  std::vector<std::string> names_;
  ElementId one_{};
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> dagger_;  // kUndefined when missing or ambiguous
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Order, bounds and partial difference of a bounded poset: (X, ≤, ⊤, ⊥, ⊖).
class DPoset {
public:
  static constexpr std::int32_t kUndefined = -1;

  DPoset() = default;
  /// leq and diff are dense row-major n×n tables; diff(y, x) lives at y*n + x.
  DPoset(std::vector<std::string> names, ElementId top, ElementId bottom,
         std::vector<std::uint8_t> leq, std::vector<std::int32_t> diff);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ElementId e) const { return names_[e.index]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  ElementId top() const noexcept { return top_; }
  ElementId bottom() const noexcept { return bottom_; }

  bool leq(ElementId x, ElementId y) const noexcept {
    return leq_[static_cast<std::size_t>(x.index) * names_.size() + y.index] != 0;
  }
  std::int32_t diff_raw(ElementId y, ElementId x) const noexcept {
    return diff_[static_cast<std::size_t>(y.index) * names_.size() + x.index];
  }
  /// y ⊖ x
  std::optional<ElementId> diff(ElementId y, ElementId x) const noexcept {
    auto v = diff_raw(y, x);
    if (v == kUndefined)
      return std::nullopt;
    return id(static_cast<std::size_t>(v));
  }

  const std::vector<std::uint8_t>& leq_table() const noexcept { return leq_; }
  const std::vector<std::int32_t>& diff_table() const noexcept { return diff_; }

private:
  std::vector<std::string> names_;
  ElementId top_{}, bottom_{};
  std::vector<std::uint8_t> leq_;
  std::vector<std::int32_t> diff_;
};

// -- axioms and the effect algebra / D-poset equivalence --------------------

AxiomReport check_effect_axioms(const EffectAlgebra& a, const VerifyOptions& opts = {});

/// a ≤ b iff a ⊕ c = b for some c, and then b ⊖ a := c. Throws Error if the
/// input has no zero or if the witness c is not unique.
DPoset derive_dposet(const EffectAlgebra& a);

AxiomReport check_dposet_axioms(const DPoset& d, const VerifyOptions& opts = {});

/// x ⊕ y := ⊤ ⊖ ((⊤ ⊖ x) ⊖ y), defined iff y ≤ ⊤ ⊖ x.
EffectAlgebra effect_from_dposet(const DPoset& d);

// -- constructions -----------------------------------------------------------

/// Componentwise structure on pairs. The pair (a, b) has index a * |B| + b.
EffectAlgebra product(const EffectAlgebra& a, const EffectAlgebra& b);
inline ElementId pair_id(const EffectAlgebra& right, ElementId x, ElementId y) {
  return id(static_cast<std::size_t>(x.index) * right.size() + y.index);
}

/// The interval [x, y] with its transferred structure and the order
/// isomorphism [x, y] ≅ [⊥, y ⊖ x].
struct IntervalAlgebra {
  EffectAlgebra algebra;             // carrier listed in ambient index order; labels inherited
  std::vector<ElementId> embedding;  // interval id -> ambient id
  std::vector<ElementId> lower;      // ambient ids of [⊥, y ⊖ x], ascending
  std::vector<ElementId> to_lower;   // interval id -> ambient id of z ⊖ x
  std::vector<ElementId> from_lower; // position in `lower` -> ambient id of ⊤ ⊖ ((⊤ ⊖ x) ⊖ w)
  ElementId bottom, top;             // ambient x and y
};

/// Throws Error unless x ≤ y.
IntervalAlgebra interval(const EffectAlgebra& a, ElementId x, ElementId y);
IntervalAlgebra interval(const EffectAlgebra& a, const DPoset& d, ElementId x, ElementId y);

/// Both iso maps land in the right sets, are monotone and compose to
/// identities in both directions.
AxiomReport check_interval_iso(const EffectAlgebra& a, const IntervalAlgebra& iv);

// -- morphisms ---------------------------------------------------------------

struct GenMorphism {
  EffectAlgebra source;
  EffectAlgebra target;
  std::vector<ElementId> map;  // total, indexed by source element
};

/// Checks `monotone`, `preserves-difference` and `preserves-top`. The first two
/// make f generalized D-monotonic; all three make it D-monotonic.
AxiomReport check_generalized_morphism(const GenMorphism& f, const VerifyOptions& opts = {});
bool is_generalized_d_monotonic(const AxiomReport& r);
bool is_d_monotonic(const AxiomReport& r);

/// Closed under ⊖ on comparable pairs and has a greatest element of its own.
bool is_generalized_sub_dposet(const EffectAlgebra& a, std::span<const ElementId> subset);

// -- derived properties ------------------------------------------------------

/// Exhaustively checks the standard consequences of the D-poset and effect
/// algebra axioms and the interaction laws between ⊕ and ⊖, one check per law.
AxiomReport check_derived_properties(const EffectAlgebra& a, const VerifyOptions& opts = {});

// -- isomorphism -------------------------------------------------------------

inline constexpr std::size_t kIsomorphismSearchCap = 8;

/// Brute-force search over relabelings; result maps a's ids to b's ids.
/// Throws GuardError above kIsomorphismSearchCap elements.
std::optional<std::vector<ElementId>> find_isomorphism(const EffectAlgebra& a, const EffectAlgebra& b);
bool isomorphic(const EffectAlgebra& a, const EffectAlgebra& b);

} // namespace eacat
