#include "eacat/omega.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "eacat/error.hpp"
#include "eacat/simplex.hpp"

namespace eacat::omega {

Cell make_cell(std::vector<ElementId> seq) {
  if (seq.empty() || seq.size() % 2 == 0)
    throw Error("a cell has an odd, positive number of entries");
  int level = static_cast<int>(seq.size() / 2);
  return Cell{level, std::move(seq)};
}

std::string to_string(const EffectAlgebra& a, const Cell& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.seq.size(); ++k) {
    if (k)
      out += ',';
    out += a.name(c.seq[k]);
  }
  return out + ")";
}

bool enumeration_feasible(std::size_t carrier, int level) {
  if (level < 0)
    return false;
  if (carrier <= 1)
    return true;
  return static_cast<double>(2 * level + 1) * std::log2(static_cast<double>(carrier)) <= 24.0;
}

std::uint64_t chain_cell_count(std::size_t carrier, int level) {
  // C(carrier + 2n, 2n + 1), computed incrementally; exact while it fits.
  const std::uint64_t k = static_cast<std::uint64_t>(2 * level + 1);
  const std::uint64_t top = carrier + k - 1;
  if (carrier == 0)
    return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (top - k + i) / i;
  return r;
}

OmegaCategory::OmegaCategory(EffectAlgebra algebra)
    : algebra_(std::move(algebra)), dposet_(derive_dposet(algebra_)) {}

ElementId OmegaCategory::minus(ElementId y, ElementId x) const {
  auto d = dposet_.diff(y, x);
  if (!d)
    throw Error("difference " + algebra_.name(y) + " - " + algebra_.name(x) + " undefined");
  return *d;
}

ElementId OmegaCategory::plus(ElementId a, ElementId b) const {
  auto s = algebra_.sum(a, b);
  if (!s)
    throw Error("sum " + algebra_.name(a) + " + " + algebra_.name(b) + " undefined");
  return *s;
}

bool OmegaCategory::is_cell(const Cell& c) const {
  if (c.level < 0 || c.seq.size() != static_cast<std::size_t>(2 * c.level + 1))
    return false;
  for (std::size_t k = 0; k < c.seq.size(); ++k) {
    if (c.seq[k].index >= algebra_.size())
      return false;
    if (k > 0 && !dposet_.leq(c.seq[k - 1], c.seq[k]))
      return false;
  }
  return true;
}

std::vector<Cell> OmegaCategory::enumerate_cells(int level, bool force) const {
  if (level < 0)
    throw Error("cell level must be non-negative");
  const std::size_t n = algebra_.size();
  if (!force && !enumeration_feasible(n, level))
    throw GuardError("enumerating level-" + std::to_string(level) + " cells over " +
                     std::to_string(n) + " elements exceeds the feasibility guard");
  std::vector<std::vector<ElementId>> above(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (dposet_.leq(id(x), id(y)))
        above[x].push_back(id(y));

  const std::size_t len = static_cast<std::size_t>(2 * level + 1);
  std::vector<Cell> out;
  std::vector<ElementId> seq(len);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == len) {
      out.push_back(Cell{level, seq});
      return;
    }
    if (k == 0) {
      for (std::size_t e = 0; e < n; ++e) {
        seq[0] = id(e);
        rec(1);
      }
      return;
    }
    for (ElementId e : above[seq[k - 1].index]) {
      seq[k] = e;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::uint64_t OmegaCategory::count_cells(int level, bool force) const {
  if (level < 0)
    throw Error("cell level must be non-negative");
  const std::size_t n = algebra_.size();
  if (!force && !enumeration_feasible(n, level))
    throw GuardError("counting level-" + std::to_string(level) + " cells over " +
                     std::to_string(n) + " elements exceeds the feasibility guard");
  // chains ending at each element, extended one position at a time
  std::vector<std::uint64_t> ending(n, 1);
  for (int k = 1; k < 2 * level + 1; ++k) {
    std::vector<std::uint64_t> next(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (dposet_.leq(id(x), id(y)))
          next[y] += ending[x];
    ending = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : ending)
    total += v;
  return total;
}

namespace {

void require_lower(const Cell& c, int i) {
  if (i < 0 || i >= c.level)
    throw Error("boundary level " + std::to_string(i) + " out of range for a " +
                std::to_string(c.level) + "-cell");
}

Cell precompose(const Cell& c, const simplex::MonotoneMap& m) {
  if (m.cod().size() != static_cast<int>(c.seq.size()))
    throw Error("simplex map does not match cell length");
  std::vector<ElementId> seq;
  for (int v : m.images())
    seq.push_back(c.seq[static_cast<std::size_t>(v)]);
  return make_cell(std::move(seq));
}

} // namespace

Cell OmegaCategory::source(const Cell& c, int i) const {
  require_lower(c, i);
  const int n = c.level - i;
  std::vector<ElementId> seq;
  for (int k = 0; k <= 2 * i; ++k)
    seq.push_back(c.seq[static_cast<std::size_t>(k <= i ? k : k + 2 * n)]);
  return Cell{i, std::move(seq)};
}

Cell OmegaCategory::target(const Cell& c, int i) const {
  require_lower(c, i);
  const int n = c.level - i;
  std::vector<ElementId> seq;
  for (int k = 0; k <= 2 * i; ++k)
    seq.push_back(c.seq[static_cast<std::size_t>(k < i ? k : k + 2 * n)]);
  return Cell{i, std::move(seq)};
}

Cell OmegaCategory::source_via_simplex(const Cell& c, int i) const {
  require_lower(c, i);
  Cell cur = c;
  while (cur.level > i)
    cur = precompose(cur, simplex::build_source(cur.level - 1));
  return cur;
}

Cell OmegaCategory::target_via_simplex(const Cell& c, int i) const {
  require_lower(c, i);
  Cell cur = c;
  while (cur.level > i)
    cur = precompose(cur, simplex::build_target(cur.level - 1));
  return cur;
}

Cell OmegaCategory::identity(const Cell& c) const { return identity_to(c, c.level + 1); }

Cell OmegaCategory::identity_to(const Cell& c, int level) const {
  if (level <= c.level)
    throw Error("identity must raise the level");
  const int i = c.level;
  const int n = level - i;
  std::vector<ElementId> seq;
  for (int k = 0; k <= 2 * i + 2 * n; ++k) {
    int from = k < i ? k : (k <= i + 2 * n ? i : k - 2 * n);
    seq.push_back(c.seq[static_cast<std::size_t>(from)]);
  }
  return Cell{level, std::move(seq)};
}

Cell OmegaCategory::identity_via_simplex(const Cell& c) const {
  return precompose(c, simplex::build_identity(c.level));
}

bool OmegaCategory::composable(int base, const Cell& f, const Cell& g) const {
  return f.level == g.level && base >= 0 && base < f.level && source(f, base) == target(g, base);
}

Cell OmegaCategory::compose(int base, const Cell& f, const Cell& g) const {
  if (!composable(base, f, g))
    throw Error("cells " + label(f) + " and " + label(g) + " are not composable along level " +
                std::to_string(base));
  const int n = base;
  const int k = f.level - base;
  const auto at = [](const Cell& c, int i) { return c.seq[static_cast<std::size_t>(i)]; };
  std::vector<ElementId> seq(f.seq.size());
  for (int i = 0; i <= 2 * f.level; ++i) {
    ElementId v;
    if (i <= n)
      v = at(g, i);
    else if (i < n + 2 * k)
      v = plus(minus(at(f, i), at(f, n)), at(g, i));
    else
      v = at(f, i);
    seq[static_cast<std::size_t>(i)] = v;
  }
  return Cell{f.level, std::move(seq)};
}

Cell OmegaCategory::compose_alternative(int base, const Cell& f, const Cell& g) const {
  if (f.level != base + 1)
    throw Error("alternative composite formula is defined only one level above the base");
  if (!composable(base, f, g))
    throw Error("cells are not composable");
  const std::size_t n = static_cast<std::size_t>(base);
  Cell out = g;
  out.seq[n + 1] = plus(minus(f.seq[n + 1], g.seq[n + 2]), g.seq[n + 1]);
  for (std::size_t i = n + 2; i < f.seq.size(); ++i)
    out.seq[i] = f.seq[i];
  return out;
}

// -- hom algebras and functors -------------------------------------------------

IntervalAlgebra hom_algebra(const EffectAlgebra& a, ElementId x, ElementId y) {
  return interval(a, x, y);
}

GenMorphism composition_morphism(const EffectAlgebra& a, ElementId x, ElementId y, ElementId z) {
  const DPoset D = derive_dposet(a);
  if (!D.leq(x, y) || !D.leq(y, z))
    throw Error("composition needs x <= y <= z");
  const IntervalAlgebra outer = interval(a, D, y, z);
  const IntervalAlgebra inner = interval(a, D, x, y);
  const IntervalAlgebra whole = interval(a, D, x, z);

  std::map<ElementId, ElementId> local;
  for (std::size_t k = 0; k < whole.embedding.size(); ++k)
    local[whole.embedding[k]] = id(k);

  GenMorphism m{product(outer.algebra, inner.algebra), whole.algebra, {}};
  for (ElementId f : outer.embedding) {
    for (ElementId g : inner.embedding) {
      auto fy = D.diff(f, y);
      auto mid = fy ? a.sum(*fy, g) : std::nullopt;
      if (!mid || !local.count(*mid))
        throw Error("composite of hom elements leaves the hom-set");
      m.map.push_back(local.at(*mid));
    }
  }
  return m;
}

Cell LiftedFunctor::apply(const Cell& c) const {
  Cell out = c;
  for (ElementId& e : out.seq)
    e = morphism.map.at(e.index);
  return out;
}

LiftedFunctor lift_functor(GenMorphism f) { return LiftedFunctor{std::move(f)}; }

AxiomReport check_functor(const LiftedFunctor& F, const VerifyOptions& opts) {
  const EffectAlgebra& X = F.morphism.source;
  const EffectAlgebra& Y = F.morphism.target;
  AxiomReport report = check_generalized_morphism(F.morphism, opts);
  if (report.count(Verdict::Refused) > 0)
    return report;

  const OmegaCategory CX(X), CY(Y);
  const std::size_t n = X.size();

  std::vector<Cell> ones;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t y = 0; y < n; ++y) {
        Cell c{1, {id(x), id(m), id(y)}};
        if (CX.is_cell(c))
          ones.push_back(std::move(c));
      }

  std::optional<Witness> hom;
  for (const Cell& c : ones)
    if (!hom && !CY.is_cell(F.apply(c)))
      hom = Witness{CX.label(c)};
  report.record("hom-preservation", hom);

  std::optional<Witness> ident;
  for (std::size_t x = 0; x < n && !ident; ++x) {
    Cell obj{0, {id(x)}};
    if (F.apply(CX.identity(obj)) != CY.identity(F.apply(obj)))
      ident = Witness{X.name(id(x))};
  }
  report.record("identity-preservation", ident);

  std::optional<Witness> additive;
  for (std::size_t p = 0; p < n && !additive; ++p)
    for (std::size_t q = 0; q < n && !additive; ++q) {
      auto s = X.sum(id(p), id(q));
      if (!s)
        continue;
      auto t = Y.sum(F.morphism.map[p], F.morphism.map[q]);
      if (!t || *t != F.morphism.map[s->index])
        additive = Witness{X.name(id(p)), X.name(id(q))};
    }
  report.record("additivity", additive);

  report.record("composition-preservation",
                find_first<Witness>(ones.size(), opts.jobs, [&](std::size_t a) -> std::optional<Witness> {
                  const Cell& f = ones[a];
                  for (const Cell& g : ones) {
                    if (!CX.composable(0, f, g))
                      continue;
                    Cell lhs = F.apply(CX.compose(0, f, g));
                    Cell Ff = F.apply(f), Fg = F.apply(g);
                    if (!CY.composable(0, Ff, Fg) || CY.compose(0, Ff, Fg) != lhs)
                      return Witness{CX.label(f), CX.label(g)};
                  }
                  return std::nullopt;
                }));
  return report;
}

AxiomReport check_monoidality(const EffectAlgebra& A, const EffectAlgebra& B, const VerifyOptions& opts) {
  AxiomReport report;
  const EffectAlgebra P = product(A, B);
  if (P.size() > kExhaustiveCarrierCap && !opts.force) {
    report.refuse("monoidality", "product carrier too large");
    return report;
  }
  const OmegaCategory CA(A), CB(B), CP(P);
  const std::size_t na = A.size(), nb = B.size(), np = P.size();
  auto left = [&](ElementId p) { return id(p.index / nb); };
  auto right = [&](ElementId p) { return id(p.index % nb); };
  auto split = [&](const Cell& c) {
    Cell l = c, r = c;
    for (std::size_t k = 0; k < c.seq.size(); ++k) {
      l.seq[k] = left(c.seq[k]);
      r.seq[k] = right(c.seq[k]);
    }
    return std::pair{l, r};
  };
  const DPoset& DP = CP.dposet();

  // hom-sets of the product category and of the product of categories
  std::optional<Witness> cardinality, bijection;
  for (std::size_t s = 0; s < np; ++s) {
    for (std::size_t t = 0; t < np; ++t) {
      ElementId src = id(s), tgt = id(t);
      std::vector<Cell> homP;
      for (std::size_t m = 0; m < np; ++m)
        if (DP.leq(src, id(m)) && DP.leq(id(m), tgt))
          homP.push_back(Cell{1, {src, id(m), tgt}});
      std::size_t homA = 0, homB = 0;
      for (std::size_t m = 0; m < na; ++m)
        homA += CA.is_cell(Cell{1, {left(src), id(m), left(tgt)}}) ? 1 : 0;
      for (std::size_t m = 0; m < nb; ++m)
        homB += CB.is_cell(Cell{1, {right(src), id(m), right(tgt)}}) ? 1 : 0;
      if (!cardinality && homP.size() != homA * homB)
        cardinality = Witness{P.name(src), P.name(tgt)};

      std::vector<std::pair<Cell, Cell>> images;
      for (const Cell& c : homP) {
        auto pr = split(c);
        if (!CA.is_cell(pr.first) || !CB.is_cell(pr.second))
          bijection = bijection ? bijection : Witness{CP.label(c)};
        images.push_back(std::move(pr));
      }
      std::sort(images.begin(), images.end());
      if (!bijection && std::adjacent_find(images.begin(), images.end()) != images.end())
        bijection = Witness{P.name(src), P.name(tgt)};
      if (!bijection && images.size() != homA * homB)
        bijection = Witness{P.name(src), P.name(tgt)};
    }
  }
  report.record("hom-cardinality", cardinality);
  report.record("hom-bijection", bijection);

  std::optional<Witness> ident;
  for (std::size_t p = 0; p < np && !ident; ++p) {
    Cell obj{0, {id(p)}};
    auto [l, r] = split(CP.identity(obj));
    auto [ol, orr] = split(obj);
    if (l != CA.identity(ol) || r != CB.identity(orr))
      ident = Witness{P.name(id(p))};
  }
  report.record("identity-agrees", ident);

  std::vector<Cell> ones;
  for (std::size_t s = 0; s < np; ++s)
    for (std::size_t m = 0; m < np; ++m)
      for (std::size_t t = 0; t < np; ++t) {
        Cell c{1, {id(s), id(m), id(t)}};
        if (CP.is_cell(c))
          ones.push_back(std::move(c));
      }
  report.record("composition-agrees",
                find_first<Witness>(ones.size(), opts.jobs, [&](std::size_t a) -> std::optional<Witness> {
                  const Cell& f = ones[a];
                  for (const Cell& g : ones) {
                    if (!CP.composable(0, f, g))
                      continue;
                    auto [fl, fr] = split(f);
                    auto [gl, gr] = split(g);
                    auto [cl, cr] = split(CP.compose(0, f, g));
                    if (!CA.composable(0, fl, gl) || !CB.composable(0, fr, gr) ||
                        CA.compose(0, fl, gl) != cl || CB.compose(0, fr, gr) != cr)
                      return Witness{CP.label(f), CP.label(g)};
                  }
                  return std::nullopt;
                }));
  return report;
}

} // namespace eacat::omega
