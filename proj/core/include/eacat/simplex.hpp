#pragma once

#include <compare>
#include <string>
#include <vector>

#include "eacat/report.hpp"

namespace eacat::simplex {

/// The finite ordinal [n] = {0, ..., n}; [-1] is the empty ordinal.
struct Ordinal {
  int n = -1;

  constexpr int size() const noexcept { return n + 1; }
  constexpr auto operator<=>(const Ordinal&) const = default;
};

/// Order-preserving map between finite ordinals, stored as its image list.
class MonotoneMap {
public:
  /// Throws Error unless images has dom.size() entries in [0, cod.n] and is
  /// nondecreasing.
  MonotoneMap(Ordinal dom, Ordinal cod, std::vector<int> images);

  Ordinal dom() const noexcept { return dom_; }
  Ordinal cod() const noexcept { return cod_; }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }

  bool operator==(const MonotoneMap&) const = default;

private:
  Ordinal dom_, cod_;
  std::vector<int> images_;
};

std::string to_string(const MonotoneMap& f);

MonotoneMap identity(Ordinal o);
/// u : [-1] -> [0]
MonotoneMap unit();
/// μ : [1] -> [0]
MonotoneMap multiplication();
/// μ² = μ ∘ (μ ⊠ 1_[0]) : [2] -> [0]
MonotoneMap multiplication2();

/// g ∘ f; throws Error unless f.cod() == g.dom().
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Ordinal sum: [n] ⊠ [m] = [n + m + 1]; f's images first, then g's shifted
/// past f's codomain.
Ordinal ordinal_sum(Ordinal a, Ordinal b);
MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g);
MonotoneMap ordinal_sum(std::initializer_list<MonotoneMap> parts);

/// Face δⁿᵢ : [n-2] -> [n-1], skipping the value i; n ≥ 1, 0 ≤ i ≤ n-1.
MonotoneMap face(int n, int i);
/// Degeneracy σⁿᵢ : [n] -> [n-1], sending i and i+1 to i; n ≥ 1, 0 ≤ i ≤ n-1.
MonotoneMap degeneracy(int n, int i);
/// The same maps assembled as 1_[i-1] ⊠ u ⊠ 1_[n-i-2] and 1_[i-1] ⊠ μ ⊠ 1_[n-i-2].
MonotoneMap face_by_ordinal_sum(int n, int i);
MonotoneMap degeneracy_by_ordinal_sum(int n, int i);

/// sⁿ = 1_[n] ⊠ u ⊠ u ⊠ 1_[n-1] : [2n] -> [2n+2]
MonotoneMap build_source(int n);
/// tⁿ = 1_[n-1] ⊠ u ⊠ u ⊠ 1_[n] : [2n] -> [2n+2]
MonotoneMap build_target(int n);
/// iⁿ = 1_[n-1] ⊠ μ² ⊠ 1_[n-1] : [2n+2] -> [2n]
MonotoneMap build_identity(int n);

/// Every monotone map dom -> cod, in lexicographic order of images.
std::vector<MonotoneMap> all_maps(Ordinal dom, Ordinal cod);

/// Epi-mono factorization: degeneracies (descending index) followed by faces
/// (ascending index). Composing the result in order reproduces f.
struct Factorization {
  std::vector<MonotoneMap> degeneracies;  // applied first
  std::vector<MonotoneMap> faces;         // applied after
};
Factorization factorize(const MonotoneMap& f);
MonotoneMap recompose(const Factorization& fac, Ordinal dom);

inline constexpr int kMaxSimplexCheck = 8;

/// Simplicial identities, monoid axioms for ([0], u, μ), face/degeneracy
/// factorizations through ordinal sum, bifunctoriality and the globular and
/// reflexive identities of the source/target/identity builders, for all
/// indices with ordinals up to [maxN]. Throws Error if maxN > 8.
AxiomReport check_simplex_laws(int maxN);

} // namespace eacat::simplex
