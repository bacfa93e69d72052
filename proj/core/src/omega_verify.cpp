#include <map>
#include <string>

#include "eacat/error.hpp"
#include "eacat/omega.hpp"

namespace eacat::omega {

namespace {

using Opt = std::optional<Witness>;

std::string levels(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

// Groups cells of one level by a boundary so composable partners are looked up
// instead of scanned.
using Index = std::map<Cell, std::vector<std::size_t>>;

Index index_by(const std::vector<Cell>& cells, auto&& boundary) {
  Index idx;
  for (std::size_t a = 0; a < cells.size(); ++a)
    idx[boundary(cells[a])].push_back(a);
  return idx;
}

const std::vector<std::size_t>& lookup(const Index& idx, const Cell& key) {
  static const std::vector<std::size_t> none;
  auto it = idx.find(key);
  return it == idx.end() ? none : it->second;
}

// Accumulates the first failure over several find_first sweeps.
struct Sweep {
  Opt first;
  void take(Opt w) {
    if (!first && w)
      first = std::move(w);
  }
};

} // namespace

AxiomReport verify_omega_laws(const EffectAlgebra& algebra, int maxLevel, const VerifyOptions& opts) {
  AxiomReport report;
  if (maxLevel < 0)
    throw Error("max level must be non-negative");

  AxiomReport axioms = check_effect_axioms(algebra, opts);
  if (!axioms.all_passed()) {
    for (const Check& c : axioms.checks())
      if (c.verdict != Verdict::Pass) {
        if (c.verdict == Verdict::Fail)
          report.fail("effect-algebra", {c.id, format_witness(c.witness)});
        else
          report.refuse("effect-algebra", c.note);
        return report;
      }
  }
  report.pass("effect-algebra");

  if (!opts.force && !enumeration_feasible(algebra.size(), maxLevel)) {
    report.refuse("enumeration", "level-" + std::to_string(maxLevel) + " cells over " +
                                     std::to_string(algebra.size()) +
                                     " elements exceed the feasibility guard");
    return report;
  }

  const OmegaCategory C(algebra);
  const unsigned jobs = opts.jobs;
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(maxLevel) + 1);
  for (int L = 0; L <= maxLevel; ++L)
    cells[static_cast<std::size_t>(L)] = C.enumerate_cells(L, true);
  auto at = [&](int L) -> const std::vector<Cell>& { return cells[static_cast<std::size_t>(L)]; };
  auto lbl = [&](const Cell& c) { return C.label(c); };

  // globular identities, one step at a time
  {
    Sweep sw;
    for (int L = 2; L <= maxLevel; ++L) {
      const auto& cs = at(L);
      sw.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& c = cs[a];
        Cell s1 = C.source(c, L - 1), t1 = C.target(c, L - 1);
        if (C.source(s1, L - 2) != C.source(t1, L - 2) || C.target(s1, L - 2) != C.target(t1, L - 2))
          return Witness{lbl(c)};
        return std::nullopt;
      }));
    }
    report.record("globular", sw.first);
  }

  {
    Sweep sw;
    for (int L = 1; L <= maxLevel; ++L) {
      const auto& cs = at(L);
      sw.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& c = cs[a];
        for (int i = 0; i < L; ++i)
          if (C.source(c, i) != C.source_via_simplex(c, i) ||
              C.target(c, i) != C.target_via_simplex(c, i))
            return Witness{lbl(c), "i=" + std::to_string(i)};
        return std::nullopt;
      }));
    }
    report.record("boundary-via-simplex", sw.first);
  }

  {
    Sweep refl, viaSimplex;
    for (int L = 0; L < maxLevel; ++L) {
      const auto& cs = at(L);
      refl.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& c = cs[a];
        Cell up = C.identity(c);
        if (!C.is_cell(up) || C.source(up, L) != c || C.target(up, L) != c)
          return Witness{lbl(c)};
        return std::nullopt;
      }));
      viaSimplex.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& c = cs[a];
        if (C.identity(c) != C.identity_via_simplex(c))
          return Witness{lbl(c)};
        return std::nullopt;
      }));
    }
    report.record("reflexive", refl.first);
    report.record("identity-via-simplex", viaSimplex.first);
  }

  // category structure for every pair of levels i < j
  Sweep unitR, unitL, wellDefined, compSource, compTarget, compBoundary, assoc, alt, identFunctor;
  for (int j = 1; j <= maxLevel; ++j) {
    const auto& cs = at(j);
    for (int i = 0; i < j; ++i) {
      const Index byTarget = index_by(cs, [&](const Cell& c) { return C.target(c, i); });
      const Index bySource = index_by(cs, [&](const Cell& c) { return C.source(c, i); });
      const std::string ctx = levels(i, j);

      unitR.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& f = cs[a];
        if (C.compose(i, f, C.identity_to(C.source(f, i), j)) != f)
          return Witness{ctx, lbl(f)};
        return std::nullopt;
      }));
      unitL.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& f = cs[a];
        if (C.compose(i, C.identity_to(C.target(f, i), j), f) != f)
          return Witness{ctx, lbl(f)};
        return std::nullopt;
      }));

      wellDefined.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& f = cs[a];
        for (std::size_t b : lookup(byTarget, C.source(f, i))) {
          const Cell& g = cs[b];
          try {
            if (!C.is_cell(C.compose(i, f, g)))
              return Witness{ctx, lbl(f), lbl(g)};
          } catch (const Error&) {
            return Witness{ctx, lbl(f), lbl(g)};
          }
        }
        return std::nullopt;
      }));

      compSource.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& f = cs[a];
        for (std::size_t b : lookup(byTarget, C.source(f, i))) {
          const Cell& g = cs[b];
          if (C.source(C.compose(i, f, g), i) != C.source(g, i))
            return Witness{ctx, lbl(f), lbl(g)};
        }
        return std::nullopt;
      }));
      compTarget.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& f = cs[a];
        for (std::size_t b : lookup(byTarget, C.source(f, i))) {
          const Cell& g = cs[b];
          if (C.target(C.compose(i, f, g), i) != C.target(f, i))
            return Witness{ctx, lbl(f), lbl(g)};
        }
        return std::nullopt;
      }));

      // boundaries strictly between i and j commute with c_i
      compBoundary.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& f = cs[a];
        for (std::size_t b : lookup(byTarget, C.source(f, i))) {
          const Cell& g = cs[b];
          const Cell fg = C.compose(i, f, g);
          for (int m = i + 1; m < j; ++m) {
            Cell sf = C.source(f, m), sg = C.source(g, m);
            Cell tf = C.target(f, m), tg = C.target(g, m);
            if (!C.composable(i, sf, sg) || C.source(fg, m) != C.compose(i, sf, sg) ||
                !C.composable(i, tf, tg) || C.target(fg, m) != C.compose(i, tf, tg))
              return Witness{ctx, "m=" + std::to_string(m), lbl(f), lbl(g)};
          }
        }
        return std::nullopt;
      }));

      assoc.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
        const Cell& g = cs[a];
        const auto& fs = lookup(bySource, C.target(g, i));
        const auto& hs = lookup(byTarget, C.source(g, i));
        for (std::size_t fb : fs) {
          const Cell& f = cs[fb];
          const Cell fg = C.compose(i, f, g);
          for (std::size_t hb : hs) {
            const Cell& h = cs[hb];
            if (C.compose(i, f, C.compose(i, g, h)) != C.compose(i, fg, h))
              return Witness{ctx, lbl(f), lbl(g), lbl(h)};
          }
        }
        return std::nullopt;
      }));

      if (j == i + 1) {
        alt.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
          const Cell& f = cs[a];
          for (std::size_t b : lookup(byTarget, C.source(f, i))) {
            const Cell& g = cs[b];
            if (C.compose(i, f, g) != C.compose_alternative(i, f, g))
              return Witness{ctx, lbl(f), lbl(g)};
          }
          return std::nullopt;
        }));
      }

      if (j < maxLevel) {
        identFunctor.take(find_first<Witness>(cs.size(), jobs, [&](std::size_t a) -> Opt {
          const Cell& f = cs[a];
          for (std::size_t b : lookup(byTarget, C.source(f, i))) {
            const Cell& g = cs[b];
            if (C.identity(C.compose(i, f, g)) != C.compose(i, C.identity(f), C.identity(g)))
              return Witness{ctx, lbl(f), lbl(g)};
          }
          return std::nullopt;
        }));
      }
    }
  }
  report.record("composite-is-cell", wellDefined.first);
  report.record("unit-right", unitR.first);
  report.record("unit-left", unitL.first);
  report.record("composite-source", compSource.first);
  report.record("composite-target", compTarget.first);
  report.record("composite-boundaries", compBoundary.first);
  report.record("associativity", assoc.first);
  report.record("composite-alternative-formula", alt.first);
  report.record("identity-functoriality", identFunctor.first);

  // interchange for i < j < k
  {
    Sweep sw;
    for (int k = 2; k <= maxLevel; ++k) {
      const auto& cs = at(k);
      for (int j = 1; j < k; ++j) {
        std::vector<std::pair<std::size_t, std::size_t>> pairsJ;
        const Index byTargetJ = index_by(cs, [&](const Cell& c) { return C.target(c, j); });
        for (std::size_t a = 0; a < cs.size(); ++a)
          for (std::size_t b : lookup(byTargetJ, C.source(cs[a], j)))
            pairsJ.emplace_back(a, b);
        for (int i = 0; i < j; ++i) {
          const std::string ctx = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                  ",k=" + std::to_string(k);
          sw.take(find_first<Witness>(pairsJ.size(), jobs, [&](std::size_t p) -> Opt {
            const Cell& a = cs[pairsJ[p].first];
            const Cell& b = cs[pairsJ[p].second];
            const Cell ab = C.compose(j, a, b);
            for (const auto& [ci, di] : pairsJ) {
              const Cell& c = cs[ci];
              const Cell& d = cs[di];
              if (!C.composable(i, a, c) || !C.composable(i, b, d))
                continue;
              const Cell cd = C.compose(j, c, d);
              const Cell ac = C.compose(i, a, c);
              const Cell bd = C.compose(i, b, d);
              if (!C.composable(i, ab, cd) || !C.composable(j, ac, bd) ||
                  C.compose(i, ab, cd) != C.compose(j, ac, bd))
                return Witness{ctx, lbl(a), lbl(b), lbl(c), lbl(d)};
            }
            return std::nullopt;
          }));
        }
      }
    }
    report.record("interchange", sw.first);
  }
  return report;
}

} // namespace eacat::omega
