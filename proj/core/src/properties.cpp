#include <string>

#include "eacat/effect_algebra.hpp"
#include "eacat/error.hpp"

namespace eacat {

namespace {

using Opt = std::optional<Witness>;

// Dense view of both structures with per-element down/up sets, so the nested
// quantifiers only walk comparable elements.
struct Structure {
  const EffectAlgebra& A;
  DPoset D;
  std::size_t n;
  ElementId top, bottom;
  std::vector<std::vector<ElementId>> below, above;

  explicit Structure(const EffectAlgebra& a)
      : A(a), D(derive_dposet(a)), n(a.size()), top(D.top()), bottom(D.bottom()),
        below(n), above(n) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (D.leq(id(y), id(x))) {
          below[x].push_back(id(y));
          above[y].push_back(id(x));
        }
  }

  bool le(ElementId x, ElementId y) const { return D.leq(x, y); }
  std::optional<ElementId> minus(ElementId y, ElementId x) const { return D.diff(y, x); }
  std::optional<ElementId> plus(ElementId a, ElementId b) const { return A.sum(a, b); }
  std::optional<ElementId> comp(ElementId a) const { return A.try_dagger(a); }

  std::string operator()(ElementId e) const { return A.name(e); }
};

template <class... E>
Witness wit(const Structure& s, E... e) {
  return Witness{s(e)...};
}

} // namespace

AxiomReport check_derived_properties(const EffectAlgebra& algebra, const VerifyOptions& opts) {
  AxiomReport report;
  if (algebra.size() > kExhaustiveCarrierCap && !opts.force) {
    report.refuse("derived-properties", "carrier too large (" + std::to_string(algebra.size()) +
                                            " > " + std::to_string(kExhaustiveCarrierCap) + ")");
    return report;
  }
  const Structure S(algebra);
  const std::size_t n = S.n;
  const unsigned jobs = opts.jobs;
  auto forall = [&](auto&& body) { return find_first<Witness>(n, jobs, body); };

  // --- D-poset consequences ---

  report.record("self-difference-is-bottom", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    if (S.minus(x, x) != S.bottom || !S.le(S.bottom, x))
      return wit(S, x);
    return std::nullopt;
  }));

  report.record("difference-of-bottom", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    if (S.minus(x, S.bottom) != x)
      return wit(S, x);
    return std::nullopt;
  }));

  report.record("difference-fixed-point-is-bottom", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    for (ElementId y : S.below[i])
      if (S.minus(x, y) == x && y != S.bottom)
        return wit(S, x, y);
    return std::nullopt;
  }));

  // z ≤ y ≤ x: y ⊖ z ≤ x ⊖ z and (x ⊖ z) ⊖ (y ⊖ z) = x ⊖ y
  report.record("difference-left-monotone", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    for (ElementId y : S.below[i])
      for (ElementId z : S.below[y.index]) {
        auto yz = S.minus(y, z), xz = S.minus(x, z);
        if (!yz || !xz || !S.le(*yz, *xz) || S.minus(*xz, *yz) != S.minus(x, y))
          return wit(S, x, y, z);
      }
    return std::nullopt;
  }));

  // y, z ≤ x: x ⊖ y = z iff x ⊖ z = y
  report.record("difference-swap", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    for (ElementId y : S.below[i])
      for (ElementId z : S.below[i])
        if ((S.minus(x, y) == z) != (S.minus(x, z) == y))
          return wit(S, x, y, z);
    return std::nullopt;
  }));

  // y ≤ x, z ≤ x ⊖ y: z ≤ x, y ≤ x ⊖ z and (x ⊖ y) ⊖ z = (x ⊖ z) ⊖ y
  report.record("difference-commute", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    for (ElementId y : S.below[i]) {
      auto xy = S.minus(x, y);
      if (!xy)
        return wit(S, x, y);
      for (ElementId z : S.below[xy->index]) {
        if (!S.le(z, x))
          return wit(S, x, y, z);
        auto xz = S.minus(x, z);
        if (!xz || !S.le(y, *xz) || S.minus(*xy, z) != S.minus(*xz, y))
          return wit(S, x, y, z);
      }
    }
    return std::nullopt;
  }));

  // − ⊖ x maps the up-set of x monotonically into the down-set of ⊤ ⊖ x
  report.record("difference-order-preserving", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    auto cx = S.minus(S.top, x);
    if (!cx)
      return wit(S, x);
    for (ElementId a : S.above[i]) {
      auto ax = S.minus(a, x);
      if (!ax || !S.le(*ax, *cx))
        return wit(S, x, a);
      for (ElementId b : S.above[a.index]) {
        auto bx = S.minus(b, x);
        if (!bx || !S.le(*ax, *bx))
          return wit(S, x, a, b);
      }
    }
    return std::nullopt;
  }));

  // x ⊖ − is an order-reversing involution of the down-set of x
  report.record("complement-order-isomorphism", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    for (ElementId a : S.below[i]) {
      auto xa = S.minus(x, a);
      if (!xa || !S.le(*xa, x) || S.minus(x, *xa) != a)
        return wit(S, x, a);
      for (ElementId b : S.below[i]) {
        auto xb = S.minus(x, b);
        if (!xb || S.le(a, b) != S.le(*xb, *xa))
          return wit(S, x, a, b);
      }
    }
    return std::nullopt;
  }));

  // --- effect algebra consequences ---

  const auto zero = S.comp(algebra.one());

  report.record("dagger-involution", forall([&](std::size_t i) -> Opt {
    ElementId a = id(i);
    auto d = S.comp(a);
    if (!d || S.comp(*d) != a)
      return wit(S, a);
    return std::nullopt;
  }));

  report.record("zero-is-unit", forall([&](std::size_t i) -> Opt {
    ElementId a = id(i);
    if (!zero || S.plus(a, *zero) != a)
      return wit(S, a);
    return std::nullopt;
  }));

  report.record("zero-sum-positivity", forall([&](std::size_t i) -> Opt {
    ElementId a = id(i);
    for (std::size_t j = 0; j < n; ++j) {
      ElementId b = id(j);
      auto s = S.plus(a, b);
      if (s && s == zero && (a != *zero || b != *zero))
        return wit(S, a, b);
    }
    return std::nullopt;
  }));

  report.record("cancellativity", forall([&](std::size_t i) -> Opt {
    ElementId a = id(i);
    std::vector<std::int32_t> seen(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
      auto s = S.plus(a, id(j));
      if (!s)
        continue;
      if (seen[s->index] >= 0)
        return wit(S, a, id(static_cast<std::size_t>(seen[s->index])), id(j));
      seen[s->index] = static_cast<std::int32_t>(j);
    }
    return std::nullopt;
  }));

  // --- interaction of ⊕ and ⊖ ---

  report.record("sum-defined-iff-below-dagger", forall([&](std::size_t i) -> Opt {
    ElementId x = id(i);
    auto cx = S.comp(x);
    for (std::size_t j = 0; j < n; ++j) {
      ElementId y = id(j);
      if (!cx || algebra.defined(x, y) != S.le(y, *cx))
        return wit(S, x, y);
    }
    return std::nullopt;
  }));

  // x ≤ y ≤ z: (z ⊖ y) ⊕ (y ⊖ x) = z ⊖ x
  report.record("difference-telescoping", forall([&](std::size_t i) -> Opt {
    ElementId z = id(i);
    for (ElementId y : S.below[i])
      for (ElementId x : S.below[y.index]) {
        auto zy = S.minus(z, y), yx = S.minus(y, x);
        if (!zy || !yx || S.plus(*zy, *yx) != S.minus(z, x))
          return wit(S, x, y, z);
      }
    return std::nullopt;
  }));

  // x ≤ z, y ≤ z ⊖ x: (z ⊖ x) ⊖ y = z ⊖ (x ⊕ y)
  report.record("difference-of-sum", forall([&](std::size_t i) -> Opt {
    ElementId z = id(i);
    for (ElementId x : S.below[i]) {
      auto zx = S.minus(z, x);
      if (!zx)
        return wit(S, x, z);
      for (ElementId y : S.below[zx->index]) {
        auto xy = S.plus(x, y);
        if (!xy || !S.le(*xy, z) || S.minus(*zx, y) != S.minus(z, *xy))
          return wit(S, x, y, z);
      }
    }
    return std::nullopt;
  }));

  // x ≤ w, z ≤ y ≤ (w ⊖ x)†: (w ⊖ x) ⊕ (y ⊖ z) = ((w ⊖ x) ⊕ y) ⊖ z
  report.record("sum-difference-shift", forall([&](std::size_t i) -> Opt {
    ElementId w = id(i);
    for (ElementId x : S.below[i]) {
      auto d = S.minus(w, x);
      auto cd = d ? S.comp(*d) : std::nullopt;
      if (!cd)
        return wit(S, w, x);
      for (ElementId y : S.below[cd->index]) {
        auto dy = S.plus(*d, y);
        for (ElementId z : S.below[y.index]) {
          auto yz = S.minus(y, z);
          auto lhs = yz ? S.plus(*d, *yz) : std::nullopt;
          if (!lhs || !dy || !S.le(z, *dy) || S.minus(*dy, z) != lhs)
            return wit(S, w, x, y, z);
        }
      }
    }
    return std::nullopt;
  }));

  // (w ⊖ x) ⊕ (y ⊖ z) = (w ⊕ y) ⊖ (x ⊕ z) wherever every subterm is defined
  report.record("sum-is-d-monotonic", forall([&](std::size_t i) -> Opt {
    ElementId w = id(i);
    for (ElementId x : S.below[i]) {
      const ElementId wx = *S.minus(w, x);
      for (std::size_t j = 0; j < n; ++j) {
        ElementId y = id(j);
        auto wy = S.plus(w, y);
        if (!wy)
          continue;
        for (ElementId z : S.below[j]) {
          auto xz = S.plus(x, z);
          if (!xz || !S.le(*xz, *wy))
            continue;
          auto lhs = S.plus(wx, *S.minus(y, z));
          if (!lhs)
            continue;
          if (S.minus(*wy, *xz) != lhs)
            return wit(S, w, x, y, z);
        }
      }
    }
    return std::nullopt;
  }));

  return report;
}

} // namespace eacat
