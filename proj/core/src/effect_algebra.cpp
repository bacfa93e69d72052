#include "eacat/effect_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eacat/error.hpp"

namespace eacat {

namespace {

bool guard_refuses(AxiomReport& report, std::size_t n, const VerifyOptions& opts,
                   const char* check_id) {
  if (n <= kExhaustiveCarrierCap || opts.force)
    return false;
  report.refuse(check_id, "carrier too large (" + std::to_string(n) + " > " +
                              std::to_string(kExhaustiveCarrierCap) + ")");
  return true;
}

} // namespace

// -- EffectAlgebra ------------------------------------------------------------

EffectAlgebra::EffectAlgebra(std::vector<std::string> names, ElementId one,
                             std::vector<std::int32_t> table)
    : names_(std::move(names)), one_(one), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0)
    throw Error("effect algebra needs at least one element");
  if (one_.index >= n)
    throw Error("unit element out of range");
  if (table_.size() != n * n)
    throw Error("sum table has wrong size");
  for (std::int32_t v : table_)
    if (v != kUndefined && (v < 0 || static_cast<std::size_t>(v) >= n))
      throw Error("sum table entry out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(names_[i], static_cast<std::uint32_t>(i)).second)
      throw Error("duplicate element label '" + names_[i] + "'");

  dagger_.assign(n, kUndefined);
  for (std::size_t a = 0; a < n; ++a) {
    std::int32_t found = kUndefined;
    int hits = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a * n + b] == static_cast<std::int32_t>(one_.index)) {
        found = static_cast<std::int32_t>(b);
        ++hits;
      }
    }
    if (hits == 1)
      dagger_[a] = found;
  }
}

EffectAlgebra EffectAlgebra::from_sums(std::vector<std::string> names, ElementId one,
                                       std::span<const SumEntry> sums) {
  const std::size_t n = names.size();
  std::vector<std::int32_t> table(n * n, kUndefined);
  auto put = [&](ElementId a, ElementId b, ElementId c) {
    std::int32_t& slot = table[static_cast<std::size_t>(a.index) * n + b.index];
    if (slot != kUndefined && slot != static_cast<std::int32_t>(c.index))
      throw Error("conflicting sums for '" + names[a.index] + "' and '" + names[b.index] + "'");
    slot = static_cast<std::int32_t>(c.index);
  };
  for (const SumEntry& s : sums) {
    if (s.a.index >= n || s.b.index >= n || s.c.index >= n)
      throw Error("sum entry refers to an element out of range");
    put(s.a, s.b, s.c);
    put(s.b, s.a, s.c);
  }
  return EffectAlgebra(std::move(names), one, std::move(table));
}

EffectAlgebra EffectAlgebra::from_table(std::vector<std::string> names, ElementId one,
                                        std::vector<std::int32_t> table) {
  return EffectAlgebra(std::move(names), one, std::move(table));
}

std::optional<ElementId> EffectAlgebra::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end())
    return std::nullopt;
  return ElementId{it->second};
}

std::optional<ElementId> EffectAlgebra::try_dagger(ElementId a) const noexcept {
  if (a.index >= dagger_.size() || dagger_[a.index] == kUndefined)
    return std::nullopt;
  return id(static_cast<std::size_t>(dagger_[a.index]));
}

ElementId EffectAlgebra::dagger(ElementId a) const {
  if (auto d = try_dagger(a))
    return *d;
  throw Error("element '" + (a.index < size() ? name(a) : std::string("?")) +
              "' has no unique orthosupplement");
}

// -- DPoset -------------------------------------------------------------------

DPoset::DPoset(std::vector<std::string> names, ElementId top, ElementId bottom,
               std::vector<std::uint8_t> leq, std::vector<std::int32_t> diff)
    : names_(std::move(names)), top_(top), bottom_(bottom), leq_(std::move(leq)),
      diff_(std::move(diff)) {
  const std::size_t n = names_.size();
  if (n == 0 || top_.index >= n || bottom_.index >= n)
    throw Error("D-poset bounds out of range");
  if (leq_.size() != n * n || diff_.size() != n * n)
    throw Error("D-poset tables have wrong size");
  for (std::int32_t v : diff_)
    if (v != kUndefined && (v < 0 || static_cast<std::size_t>(v) >= n))
      throw Error("difference table entry out of range");
}

// -- axiom checks -------------------------------------------------------------

AxiomReport check_effect_axioms(const EffectAlgebra& A, const VerifyOptions& opts) {
  AxiomReport report;
  const std::size_t n = A.size();
  if (guard_refuses(report, n, opts, "effect-axioms"))
    return report;
  auto lbl = [&](std::size_t i) { return A.name(id(i)); };

  report.record("axiom-1", find_first<Witness>(n, opts.jobs, [&](std::size_t a) -> std::optional<Witness> {
    for (std::size_t b = 0; b < n; ++b)
      if (A.sum_raw(id(a), id(b)) != A.sum_raw(id(b), id(a)))
        return Witness{lbl(a), lbl(b)};
    return std::nullopt;
  }));

  report.record("axiom-2", find_first<Witness>(n, opts.jobs, [&](std::size_t a) -> std::optional<Witness> {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto bc = A.sum(id(b), id(c));
        if (!bc || !A.defined(id(a), *bc))
          continue;
        auto ab = A.sum(id(a), id(b));
        if (!ab || A.sum_raw(*ab, id(c)) != A.sum_raw(id(a), *bc))
          return Witness{lbl(a), lbl(b), lbl(c)};
      }
    }
    return std::nullopt;
  }));

  auto zero = A.try_dagger(A.one());
  std::optional<Witness> ax3;
  for (std::size_t a = 0; a < n && !ax3; ++a)
    if (A.defined(id(a), A.one()) && (!zero || id(a) != *zero))
      ax3 = Witness{lbl(a)};
  report.record("axiom-3", ax3);

  std::optional<Witness> exist, unique;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> comps;
    for (std::size_t b = 0; b < n; ++b)
      if (A.sum_raw(id(a), id(b)) == static_cast<std::int32_t>(A.one().index))
        comps.push_back(b);
    if (comps.empty() && !exist)
      exist = Witness{lbl(a)};
    if (comps.size() > 1 && !unique)
      unique = Witness{lbl(a), lbl(comps[0]), lbl(comps[1])};
  }
  report.record("axiom-4-existence", exist);
  report.record("axiom-4-uniqueness", unique);
  return report;
}

DPoset derive_dposet(const EffectAlgebra& A) {
  const std::size_t n = A.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<std::int32_t> diff(n * n, DPoset::kUndefined);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      auto b = A.sum(id(a), id(c));
      if (!b)
        continue;
      std::size_t slot = static_cast<std::size_t>(b->index) * n + a;
      if (diff[slot] != DPoset::kUndefined && diff[slot] != static_cast<std::int32_t>(c))
        throw Error("inconsistent difference: '" + A.name(*b) + "' minus '" + A.name(id(a)) +
                    "' is both '" + A.name(id(static_cast<std::size_t>(diff[slot]))) +
                    "' and '" + A.name(id(c)) + "'");
      diff[slot] = static_cast<std::int32_t>(c);
      leq[a * n + b->index] = 1;
    }
  }
  return DPoset(A.names(), A.one(), A.zero(), std::move(leq), std::move(diff));
}

AxiomReport check_dposet_axioms(const DPoset& D, const VerifyOptions& opts) {
  AxiomReport report;
  const std::size_t n = D.size();
  if (guard_refuses(report, n, opts, "dposet-axioms"))
    return report;
  auto lbl = [&](std::size_t i) { return D.name(id(i)); };
  auto le = [&](std::size_t x, std::size_t y) { return D.leq(id(x), id(y)); };

  std::optional<Witness> refl, antisym;
  for (std::size_t x = 0; x < n; ++x) {
    if (!refl && !le(x, x))
      refl = Witness{lbl(x)};
    for (std::size_t y = 0; y < n && !antisym; ++y)
      if (x != y && le(x, y) && le(y, x))
        antisym = Witness{lbl(x), lbl(y)};
  }
  report.record("order-reflexive", refl);
  report.record("order-antisymmetric", antisym);
  report.record("order-transitive", find_first<Witness>(n, opts.jobs, [&](std::size_t x) -> std::optional<Witness> {
    for (std::size_t y = 0; y < n; ++y) {
      if (!le(x, y))
        continue;
      for (std::size_t z = 0; z < n; ++z)
        if (le(y, z) && !le(x, z))
          return Witness{lbl(x), lbl(y), lbl(z)};
    }
    return std::nullopt;
  }));

  std::optional<Witness> top, bottom;
  for (std::size_t x = 0; x < n; ++x) {
    if (!top && !le(x, D.top().index))
      top = Witness{lbl(x)};
    if (!bottom && !le(D.bottom().index, x))
      bottom = Witness{lbl(x)};
  }
  report.record("top-greatest", top);
  report.record("bottom-least", bottom);

  std::optional<Witness> ax1, ax2;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      auto d = D.diff(id(y), id(x));
      if (!ax1 && d.has_value() != le(x, y))
        ax1 = Witness{lbl(y), lbl(x)};
      if (!ax2 && le(x, y)) {
        if (!d || !D.leq(*d, id(y)) || D.diff_raw(id(y), *d) != static_cast<std::int32_t>(x))
          ax2 = Witness{lbl(y), lbl(x)};
      }
    }
  }
  report.record("dposet-1", ax1);
  report.record("dposet-2", ax2);

  report.record("dposet-3", find_first<Witness>(n, opts.jobs, [&](std::size_t x) -> std::optional<Witness> {
    for (std::size_t y = 0; y < n; ++y) {
      if (!le(y, x))
        continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!le(z, y))
          continue;
        auto xy = D.diff(id(x), id(y));
        auto xz = D.diff(id(x), id(z));
        auto yz = D.diff(id(y), id(z));
        if (!xy || !xz || !yz || !D.leq(*xy, *xz) ||
            D.diff_raw(*xz, *xy) != static_cast<std::int32_t>(yz->index))
          return Witness{lbl(x), lbl(y), lbl(z)};
      }
    }
    return std::nullopt;
  }));
  return report;
}

EffectAlgebra effect_from_dposet(const DPoset& D) {
  const std::size_t n = D.size();
  const ElementId top = D.top();
  std::vector<std::int32_t> table(n * n, EffectAlgebra::kUndefined);
  auto need = [](std::optional<ElementId> v) {
    if (!v)
      throw Error("difference undefined where the D-poset axioms require it");
    return *v;
  };
  for (std::size_t x = 0; x < n; ++x) {
    ElementId cx = need(D.diff(top, id(x)));
    for (std::size_t y = 0; y < n; ++y) {
      if (!D.leq(id(y), cx))
        continue;
      ElementId inner = need(D.diff(cx, id(y)));
      table[x * n + y] = static_cast<std::int32_t>(need(D.diff(top, inner)).index);
    }
  }
  return EffectAlgebra::from_table(D.names(), top, std::move(table));
}

// -- constructions ------------------------------------------------------------

EffectAlgebra product(const EffectAlgebra& A, const EffectAlgebra& B) {
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      names.push_back("(" + A.name(id(a)) + "," + B.name(id(b)) + ")");

  std::vector<std::int32_t> table(n * n, EffectAlgebra::kUndefined);
  for (std::size_t a1 = 0; a1 < na; ++a1)
    for (std::size_t b1 = 0; b1 < nb; ++b1)
      for (std::size_t a2 = 0; a2 < na; ++a2) {
        auto sa = A.sum(id(a1), id(a2));
        if (!sa)
          continue;
        for (std::size_t b2 = 0; b2 < nb; ++b2) {
          auto sb = B.sum(id(b1), id(b2));
          if (!sb)
            continue;
          table[(a1 * nb + b1) * n + (a2 * nb + b2)] =
              static_cast<std::int32_t>(pair_id(B, *sa, *sb).index);
        }
      }
  return EffectAlgebra::from_table(std::move(names), pair_id(B, A.one(), B.one()), std::move(table));
}

IntervalAlgebra interval(const EffectAlgebra& A, ElementId x, ElementId y) {
  return interval(A, derive_dposet(A), x, y);
}

IntervalAlgebra interval(const EffectAlgebra& A, const DPoset& D, ElementId x, ElementId y) {
  const std::size_t n = A.size();
  if (x.index >= n || y.index >= n)
    throw Error("interval bounds out of range");
  if (!D.leq(x, y))
    throw Error("interval [" + A.name(x) + ", " + A.name(y) + "] is empty: lower bound is not below upper bound");

  IntervalAlgebra iv;
  iv.bottom = x;
  iv.top = y;
  std::vector<std::int32_t> local(n, -1);
  for (std::size_t z = 0; z < n; ++z) {
    if (D.leq(x, id(z)) && D.leq(id(z), y)) {
      local[z] = static_cast<std::int32_t>(iv.embedding.size());
      iv.embedding.push_back(id(z));
    }
  }
  const std::size_t m = iv.embedding.size();
  std::vector<std::string> names;
  for (ElementId e : iv.embedding)
    names.push_back(A.name(e));

  auto need = [](std::optional<ElementId> v) {
    if (!v)
      throw Error("interval construction hit an undefined operation");
    return *v;
  };

  // b ⊟ a := (b ⊖ a) ⊕ x
  std::vector<std::uint8_t> leq(m * m, 0);
  std::vector<std::int32_t> diff(m * m, DPoset::kUndefined);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ElementId a = iv.embedding[i], b = iv.embedding[j];
      if (!D.leq(a, b))
        continue;
      leq[i * m + j] = 1;
      ElementId d = need(A.sum(need(D.diff(b, a)), x));
      if (local[d.index] < 0)
        throw Error("interval difference escapes the interval");
      diff[j * m + i] = local[d.index];
    }
  }
  DPoset sub(names, id(static_cast<std::size_t>(local[y.index])),
             id(static_cast<std::size_t>(local[x.index])), std::move(leq), std::move(diff));
  iv.algebra = effect_from_dposet(sub);

  // [x, y] ≅ [⊥, y ⊖ x]
  const ElementId top = D.top();
  const ElementId width = need(D.diff(y, x));
  for (std::size_t w = 0; w < n; ++w)
    if (D.leq(id(w), width))
      iv.lower.push_back(id(w));
  for (ElementId z : iv.embedding)
    iv.to_lower.push_back(need(D.diff(z, x)));
  const ElementId cx = need(D.diff(top, x));
  for (ElementId w : iv.lower)
    iv.from_lower.push_back(need(D.diff(top, need(D.diff(cx, w)))));
  return iv;
}

AxiomReport check_interval_iso(const EffectAlgebra& A, const IntervalAlgebra& iv) {
  AxiomReport report;
  const DPoset D = derive_dposet(A);
  auto lbl = [&](ElementId e) { return A.name(e); };
  auto in_lower = [&](ElementId e) {
    return std::binary_search(iv.lower.begin(), iv.lower.end(), e);
  };
  auto lower_pos = [&](ElementId e) -> std::optional<std::size_t> {
    auto it = std::lower_bound(iv.lower.begin(), iv.lower.end(), e);
    if (it == iv.lower.end() || *it != e)
      return std::nullopt;
    return static_cast<std::size_t>(it - iv.lower.begin());
  };
  auto in_interval = [&](ElementId e) { return D.leq(iv.bottom, e) && D.leq(e, iv.top); };

  std::optional<Witness> codomain;
  for (std::size_t i = 0; i < iv.embedding.size() && !codomain; ++i)
    if (!in_lower(iv.to_lower[i]))
      codomain = Witness{lbl(iv.embedding[i])};
  for (std::size_t k = 0; k < iv.lower.size() && !codomain; ++k)
    if (!in_interval(iv.from_lower[k]))
      codomain = Witness{lbl(iv.lower[k])};
  report.record("iso-codomains", codomain);

  std::optional<Witness> back;
  for (std::size_t i = 0; i < iv.embedding.size() && !back; ++i) {
    auto k = lower_pos(iv.to_lower[i]);
    if (!k || iv.from_lower[*k] != iv.embedding[i])
      back = Witness{lbl(iv.embedding[i])};
  }
  report.record("iso-left-inverse", back);

  std::optional<Witness> forth;
  for (std::size_t k = 0; k < iv.lower.size() && !forth; ++k) {
    ElementId up = iv.from_lower[k];
    auto it = std::find(iv.embedding.begin(), iv.embedding.end(), up);
    if (it == iv.embedding.end() ||
        iv.to_lower[static_cast<std::size_t>(it - iv.embedding.begin())] != iv.lower[k])
      forth = Witness{lbl(iv.lower[k])};
  }
  report.record("iso-right-inverse", forth);

  std::optional<Witness> mono;
  for (std::size_t i = 0; i < iv.embedding.size() && !mono; ++i)
    for (std::size_t j = 0; j < iv.embedding.size() && !mono; ++j)
      if (D.leq(iv.embedding[i], iv.embedding[j]) && !D.leq(iv.to_lower[i], iv.to_lower[j]))
        mono = Witness{lbl(iv.embedding[i]), lbl(iv.embedding[j])};
  for (std::size_t k = 0; k < iv.lower.size() && !mono; ++k)
    for (std::size_t l = 0; l < iv.lower.size() && !mono; ++l)
      if (D.leq(iv.lower[k], iv.lower[l]) && !D.leq(iv.from_lower[k], iv.from_lower[l]))
        mono = Witness{lbl(iv.lower[k]), lbl(iv.lower[l])};
  report.record("iso-monotone", mono);
  return report;
}

// -- morphisms ----------------------------------------------------------------

AxiomReport check_generalized_morphism(const GenMorphism& f, const VerifyOptions& opts) {
  AxiomReport report;
  const std::size_t n = f.source.size();
  if (f.map.size() != n)
    throw Error("morphism map must be total on the source carrier");
  for (ElementId e : f.map)
    if (e.index >= f.target.size())
      throw Error("morphism map leaves the target carrier");
  if (guard_refuses(report, std::max(n, f.target.size()), opts, "morphism"))
    return report;

  const DPoset X = derive_dposet(f.source);
  const DPoset Y = derive_dposet(f.target);
  auto lbl = [&](std::size_t i) { return f.source.name(id(i)); };

  std::optional<Witness> mono, diff;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!X.leq(id(x), id(y)))
        continue;
      ElementId fx = f.map[x], fy = f.map[y];
      if (!mono && !Y.leq(fx, fy))
        mono = Witness{lbl(x), lbl(y)};
      if (!diff) {
        auto d = X.diff(id(y), id(x));
        auto fd = Y.diff(fy, fx);
        if (!d || !fd || f.map[d->index] != *fd)
          diff = Witness{lbl(x), lbl(y)};
      }
    }
  }
  report.record("monotone", mono);
  report.record("preserves-difference", diff);
  if (f.map[f.source.one().index] == f.target.one())
    report.pass("preserves-top");
  else
    report.fail("preserves-top", {f.source.name(f.source.one())});
  return report;
}

bool is_generalized_d_monotonic(const AxiomReport& r) {
  return r.passed("monotone") && r.passed("preserves-difference");
}

bool is_d_monotonic(const AxiomReport& r) {
  return is_generalized_d_monotonic(r) && r.passed("preserves-top");
}

bool is_generalized_sub_dposet(const EffectAlgebra& A, std::span<const ElementId> subset) {
  if (subset.empty())
    return false;
  const DPoset D = derive_dposet(A);
  std::vector<std::uint8_t> member(A.size(), 0);
  for (ElementId e : subset)
    member.at(e.index) = 1;

  bool has_top = std::any_of(subset.begin(), subset.end(), [&](ElementId t) {
    return std::all_of(subset.begin(), subset.end(), [&](ElementId e) { return D.leq(e, t); });
  });
  if (!has_top)
    return false;
  for (ElementId x : subset)
    for (ElementId y : subset)
      if (D.leq(x, y) && !member[D.diff(y, x)->index])
        return false;
  return true;
}

// -- isomorphism --------------------------------------------------------------

std::optional<std::vector<ElementId>> find_isomorphism(const EffectAlgebra& A, const EffectAlgebra& B) {
  const std::size_t n = A.size();
  if (n != B.size())
    return std::nullopt;
  if (n > kIsomorphismSearchCap)
    throw GuardError("isomorphism search limited to " + std::to_string(kIsomorphismSearchCap) +
                     " elements");
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    if (perm[A.one().index] != B.one().index)
      continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        std::int32_t s = A.sum_raw(id(a), id(b));
        std::int32_t t = B.sum_raw(ElementId{perm[a]}, ElementId{perm[b]});
        ok = (s == EffectAlgebra::kUndefined) ? t == EffectAlgebra::kUndefined
                                             : t == static_cast<std::int32_t>(perm[static_cast<std::size_t>(s)]);
      }
    }
    if (ok) {
      std::vector<ElementId> out(n);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = ElementId{perm[i]};
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool isomorphic(const EffectAlgebra& A, const EffectAlgebra& B) {
  return find_isomorphism(A, B).has_value();
}

} // namespace eacat
