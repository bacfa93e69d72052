#include "eacat/hilbert.hpp"

#include <deque>
#include <map>
#include <string>

#include "eacat/error.hpp"

namespace eacat {

std::optional<RatMatrix> proj_oplus(const RatMatrix& p, const RatMatrix& q) {
  if (p.dim() != q.dim())
    throw Error("proj_oplus: dimensions differ");
  if (!is_projection(p) || !is_projection(q))
    throw Error("proj_oplus: operand is not a projection");
  RatMatrix s = p + q;
  if (!is_projection(s))
    return std::nullopt;
  return s;
}

bool is_effect(const RatMatrix& m) {
  return is_psd(m) && is_psd(RatMatrix::identity(m.dim()) - m);
}

std::optional<RatMatrix> bound_oplus(const RatMatrix& p, const RatMatrix& q) {
  if (p.dim() != q.dim())
    throw Error("bound_oplus: dimensions differ");
  if (!is_effect(p) || !is_effect(q))
    throw Error("bound_oplus: operand is not an effect");
  RatMatrix s = p + q;
  if (!is_effect(s))
    return std::nullopt;
  return s;
}

EffectModel extract_algebra(const std::vector<RatMatrix>& seeds, ModelKind kind, std::size_t dim,
                            std::size_t cap) {
  if (dim == 0)
    throw Error("dimension must be positive");
  const RatMatrix Id = RatMatrix::identity(dim);
  for (const RatMatrix& s : seeds) {
    if (s.dim() != dim)
      throw Error("seed " + to_string(s) + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    bool ok = kind == ModelKind::Projection ? is_projection(s) : is_effect(s);
    if (!ok)
      throw Error("seed " + to_string(s) +
                  (kind == ModelKind::Projection ? " is not a projection" : " is not an effect"));
  }
  auto oplus = [&](const RatMatrix& p, const RatMatrix& q) {
    return kind == ModelKind::Projection ? proj_oplus(p, q) : bound_oplus(p, q);
  };

  std::vector<RatMatrix> elems;
  std::map<RatMatrix, std::size_t> index;
  auto add = [&](const RatMatrix& m) {
    if (index.count(m))
      return;
    if (elems.size() >= cap)
      throw GuardError("closure exceeds " + std::to_string(cap) + " elements");
    index.emplace(m, elems.size());
    elems.push_back(m);
  };
  add(RatMatrix::zero(dim));
  add(Id);
  for (const RatMatrix& s : seeds) {
    add(s);
    add(Id - s);
  }

  // each new element is summed against everything found before it and itself
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      auto s = oplus(elems[k], elems[j]);
      if (s) {
        RatMatrix sum = *s;
        add(sum);
        add(Id - sum);
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::string> names(n);
  for (std::size_t k = 0; k < n; ++k)
    names[k] = k == 0 ? "0" : k == 1 ? "1" : to_string(elems[k]);
  std::vector<std::int32_t> table(n * n, EffectAlgebra::kUndefined);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (auto s = oplus(elems[a], elems[b])) {
        auto c = static_cast<std::int32_t>(index.at(*s));
        table[a * n + b] = c;
        table[b * n + a] = c;
      }

  EffectModel model;
  model.kind = kind;
  model.dim = dim;
  model.elements = std::move(elems);
  model.algebra = EffectAlgebra::from_table(std::move(names), id(1), std::move(table));
  return model;
}

AxiomReport check_orthoalgebra(const EffectAlgebra& a) {
  AxiomReport report;
  auto z = a.try_dagger(a.one());
  std::optional<Witness> w;
  for (std::size_t k = 0; k < a.size() && !w; ++k) {
    ElementId e = id(k);
    if (a.defined(e, e) && (!z || e != *z))
      w = Witness{a.name(e)};
  }
  report.record("orthoalgebra", w);
  return report;
}

namespace {

// Runs check_orthoalgebra as a precondition; false (with a failure recorded) if it does not hold.
bool require_orthoalgebra(const EffectAlgebra& a, const VerifyOptions& opts, AxiomReport& report) {
  AxiomReport ax = check_effect_axioms(a, opts);
  if (!ax.all_passed()) {
    for (const Check& c : ax.checks())
      if (c.verdict == Verdict::Fail) {
        report.fail("precondition-effect-algebra", {c.id, format_witness(c.witness)});
        return false;
      } else if (c.verdict == Verdict::Refused) {
        report.refuse("precondition-effect-algebra", c.note);
        return false;
      }
  }
  const AxiomReport ortho = check_orthoalgebra(a);
  const Check& o = ortho.checks().front();
  if (o.verdict != Verdict::Pass) {
    report.fail("precondition-orthoalgebra", o.witness);
    return false;
  }
  report.pass("precondition-orthoalgebra");
  return true;
}

} // namespace

AxiomReport check_interval_suborthoalgebra(const EffectAlgebra& a, const VerifyOptions& opts) {
  AxiomReport report;
  if (!require_orthoalgebra(a, opts, report))
    return report;
  const DPoset d = derive_dposet(a);
  const ElementId zero = d.bottom();
  using Opt = std::optional<Witness>;

  std::vector<IntervalAlgebra> ivs;
  ivs.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    ivs.push_back(interval(a, d, zero, id(k)));

  auto first = [&](auto&& body) { return find_first<Witness>(a.size(), opts.jobs, body); };

  report.record("interval-effect-axioms", first([&](std::size_t k) -> Opt {
    AxiomReport r = check_effect_axioms(ivs[k].algebra);
    for (const Check& c : r.checks())
      if (c.verdict != Verdict::Pass)
        return Witness{a.name(id(k)), c.id};
    return std::nullopt;
  }));
  report.record("interval-orthoalgebra", first([&](std::size_t k) -> Opt {
    AxiomReport r = check_orthoalgebra(ivs[k].algebra);
    if (!r.all_passed())
      return Witness{a.name(id(k)), format_witness(r.checks().front().witness)};
    return std::nullopt;
  }));
  // b ⊕ c computed in A stays in [0, a] and agrees with the interval's own sum
  report.record("interval-closure", first([&](std::size_t k) -> Opt {
    const IntervalAlgebra& iv = ivs[k];
    const std::size_t m = iv.embedding.size();
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        ElementId b = iv.embedding[p], c = iv.embedding[q];
        auto amb = a.sum(b, c);
        auto loc = iv.algebra.sum(id(p), id(q));
        bool inside = amb && d.leq(*amb, id(k));
        if (inside != loc.has_value() || (loc && iv.embedding[loc->index] != *amb))
          return Witness{a.name(id(k)), a.name(b), a.name(c)};
      }
    return std::nullopt;
  }));
  report.record("interval-involution", first([&](std::size_t k) -> Opt {
    const IntervalAlgebra& iv = ivs[k];
    for (std::size_t p = 0; p < iv.embedding.size(); ++p) {
      auto dag = iv.algebra.try_dagger(id(p));
      auto rel = d.diff(id(k), iv.embedding[p]);
      if (!dag || !rel || iv.embedding[dag->index] != *rel)
        return Witness{a.name(id(k)), a.name(iv.embedding[p])};
    }
    return std::nullopt;
  }));
  return report;
}

AxiomReport check_pullback_theorem(const EffectAlgebra& a, const VerifyOptions& opts) {
  AxiomReport report;
  if (!require_orthoalgebra(a, opts, report))
    return report;
  const DPoset d = derive_dposet(a);
  const std::size_t n = a.size();
  std::vector<std::vector<ElementId>> above(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (d.leq(id(p), id(q)))
        above[p].push_back(id(q));

  auto w = find_first<Witness>(n, opts.jobs, [&](std::size_t xi) -> std::optional<Witness> {
    const ElementId x = id(xi);
    for (ElementId f : above[xi])
      for (ElementId y : above[f.index])
        for (ElementId g : above[y.index]) {
          ElementId gy = *d.diff(g, y);
          auto mm = a.sum(gy, f);
          auto chain_witness = [&](std::optional<ElementId> h) {
            // z does not enter the square; report the least one
            Witness out{a.name(x), a.name(f), a.name(y), a.name(g), a.name(above[g.index].front())};
            if (h)
              out.push_back(a.name(*h));
            return out;
          };
          if (!mm)
            return chain_witness(std::nullopt);
          const ElementId m = *mm;
          if (!d.leq(f, y) || !d.leq(f, m) || !d.leq(y, g) || !d.leq(m, g))
            return chain_witness(std::nullopt);
          for (ElementId h : above[f.index])
            if (d.leq(h, g) && d.leq(h, y) && d.leq(h, m) && !d.leq(h, f))
              return chain_witness(h);
        }
    return std::nullopt;
  });
  report.record("pullback", w);
  return report;
}

} // namespace eacat
