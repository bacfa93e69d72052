#include "eacat/simplex.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "eacat/error.hpp"

namespace eacat::simplex {

MonotoneMap::MonotoneMap(Ordinal dom, Ordinal cod, std::vector<int> images)
    : dom_(dom), cod_(cod), images_(std::move(images)) {
  if (dom_.n < -1 || cod_.n < -1)
    throw Error("ordinals start at [-1]");
  if (static_cast<int>(images_.size()) != dom_.size())
    throw Error("image list length does not match domain");
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] < 0 || images_[k] > cod_.n)
      throw Error("image out of codomain range");
    if (k > 0 && images_[k] < images_[k - 1])
      throw Error("map is not monotone");
  }
}

std::string to_string(const MonotoneMap& f) {
  std::ostringstream os;
  os << '[' << f.dom().n << "]->[" << f.cod().n << "](";
  for (std::size_t k = 0; k < f.images().size(); ++k)
    os << (k ? "," : "") << f.images()[k];
  os << ')';
  return os.str();
}

MonotoneMap identity(Ordinal o) {
  std::vector<int> img(static_cast<std::size_t>(o.size()));
  for (int k = 0; k < o.size(); ++k)
    img[static_cast<std::size_t>(k)] = k;
  return MonotoneMap(o, o, std::move(img));
}

MonotoneMap unit() { return MonotoneMap(Ordinal{-1}, Ordinal{0}, {}); }

MonotoneMap multiplication() { return MonotoneMap(Ordinal{1}, Ordinal{0}, {0, 0}); }

MonotoneMap multiplication2() {
  return compose(multiplication(), ordinal_sum(multiplication(), identity(Ordinal{0})));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod() != g.dom())
    throw Error("cannot compose " + to_string(g) + " after " + to_string(f));
  std::vector<int> img;
  img.reserve(f.images().size());
  for (int v : f.images())
    img.push_back(g(v));
  return MonotoneMap(f.dom(), g.cod(), std::move(img));
}

Ordinal ordinal_sum(Ordinal a, Ordinal b) { return Ordinal{a.n + b.n + 1}; }

MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g) {
  std::vector<int> img = f.images();
  const int shift = f.cod().size();
  for (int v : g.images())
    img.push_back(v + shift);
  return MonotoneMap(ordinal_sum(f.dom(), g.dom()), ordinal_sum(f.cod(), g.cod()), std::move(img));
}

MonotoneMap ordinal_sum(std::initializer_list<MonotoneMap> parts) {
  MonotoneMap acc = identity(Ordinal{-1});
  for (const MonotoneMap& p : parts)
    acc = ordinal_sum(acc, p);
  return acc;
}

namespace {

void check_index(int n, int i, const char* what) {
  if (n < 1 || i < 0 || i > n - 1)
    throw Error(std::string(what) + " index out of range: n=" + std::to_string(n) +
                " i=" + std::to_string(i));
}

} // namespace

MonotoneMap face(int n, int i) {
  check_index(n, i, "face");
  std::vector<int> img;
  for (int k = 0; k <= n - 2; ++k)
    img.push_back(k < i ? k : k + 1);
  return MonotoneMap(Ordinal{n - 2}, Ordinal{n - 1}, std::move(img));
}

MonotoneMap degeneracy(int n, int i) {
  check_index(n, i, "degeneracy");
  std::vector<int> img;
  for (int k = 0; k <= n; ++k)
    img.push_back(k <= i ? k : k - 1);
  return MonotoneMap(Ordinal{n}, Ordinal{n - 1}, std::move(img));
}

MonotoneMap face_by_ordinal_sum(int n, int i) {
  check_index(n, i, "face");
  return ordinal_sum({identity(Ordinal{i - 1}), unit(), identity(Ordinal{n - i - 2})});
}

MonotoneMap degeneracy_by_ordinal_sum(int n, int i) {
  check_index(n, i, "degeneracy");
  return ordinal_sum({identity(Ordinal{i - 1}), multiplication(), identity(Ordinal{n - i - 2})});
}

MonotoneMap build_source(int n) {
  if (n < 0)
    throw Error("source builder needs n >= 0");
  return ordinal_sum({identity(Ordinal{n}), unit(), unit(), identity(Ordinal{n - 1})});
}

MonotoneMap build_target(int n) {
  if (n < 0)
    throw Error("target builder needs n >= 0");
  return ordinal_sum({identity(Ordinal{n - 1}), unit(), unit(), identity(Ordinal{n})});
}

MonotoneMap build_identity(int n) {
  if (n < 0)
    throw Error("identity builder needs n >= 0");
  return ordinal_sum({identity(Ordinal{n - 1}), multiplication2(), identity(Ordinal{n - 1})});
}

std::vector<MonotoneMap> all_maps(Ordinal dom, Ordinal cod) {
  std::vector<MonotoneMap> out;
  std::vector<int> img(static_cast<std::size_t>(dom.size()));
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int lo) {
    if (k == img.size()) {
      out.emplace_back(dom, cod, img);
      return;
    }
    for (int v = lo; v <= cod.n; ++v) {
      img[k] = v;
      rec(k + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

Factorization factorize(const MonotoneMap& f) {
  Factorization fac;
  const auto& img = f.images();
  int current = f.dom().n;
  for (int j = static_cast<int>(img.size()) - 2; j >= 0; --j) {
    if (img[static_cast<std::size_t>(j)] == img[static_cast<std::size_t>(j) + 1]) {
      fac.degeneracies.push_back(degeneracy(current, j));
      --current;
    }
  }
  for (int v = 0; v <= f.cod().n; ++v) {
    if (!std::binary_search(img.begin(), img.end(), v)) {
      fac.faces.push_back(face(current + 2, v));
      ++current;
    }
  }
  return fac;
}

MonotoneMap recompose(const Factorization& fac, Ordinal dom) {
  MonotoneMap acc = identity(dom);
  for (const MonotoneMap& s : fac.degeneracies)
    acc = compose(s, acc);
  for (const MonotoneMap& d : fac.faces)
    acc = compose(d, acc);
  return acc;
}

// -- law checking -------------------------------------------------------------

namespace {

// Standard indexing: d(m, i) : [m-1] -> [m] skips i, s(m, j) : [m+1] -> [m] merges j, j+1.
MonotoneMap d(int m, int i) { return face(m + 1, i); }
MonotoneMap s(int m, int j) { return degeneracy(m + 1, j); }

class LawCollector {
public:
  explicit LawCollector(std::string id) : id_(std::move(id)) {}

  void expect(const MonotoneMap& lhs, const MonotoneMap& rhs, std::string context) {
    if (!witness_ && !(lhs == rhs))
      witness_ = Witness{std::move(context), to_string(lhs), to_string(rhs)};
  }
  void flag(std::string context) {
    if (!witness_)
      witness_ = Witness{std::move(context)};
  }
  void finish(AxiomReport& report) { report.record(id_, witness_); }

private:
  std::string id_;
  std::optional<Witness> witness_;
};

std::string ctx(const char* law, std::initializer_list<int> idx) {
  std::string out = law;
  for (int v : idx)
    out += ":" + std::to_string(v);
  return out;
}

std::vector<MonotoneMap> generators(int maxOrdinal) {
  std::vector<MonotoneMap> gens;
  for (int n = -1; n <= maxOrdinal; ++n)
    gens.push_back(identity(Ordinal{n}));
  for (int n = 1; n <= maxOrdinal + 1; ++n)
    for (int i = 0; i < n; ++i) {
      gens.push_back(face(n, i));
      if (n <= maxOrdinal)
        gens.push_back(degeneracy(n, i));
    }
  gens.push_back(unit());
  gens.push_back(multiplication());
  return gens;
}

} // namespace

AxiomReport check_simplex_laws(int maxN) {
  if (maxN < 0 || maxN > kMaxSimplexCheck)
    throw Error("check_simplex_laws: maxN must be in 0.." + std::to_string(kMaxSimplexCheck));
  AxiomReport report;

  {
    LawCollector law("face-face");
    for (int m = 0; m + 1 <= maxN; ++m)
      for (int j = 1; j <= m + 1; ++j)
        for (int i = 0; i < j; ++i)
          law.expect(compose(d(m + 1, j), d(m, i)), compose(d(m + 1, i), d(m, j - 1)),
                     ctx("dd", {m, i, j}));
    law.finish(report);
  }
  {
    LawCollector law("degeneracy-degeneracy");
    for (int m = 0; m + 2 <= maxN; ++m)
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= j; ++i)
          law.expect(compose(s(m, j), s(m + 1, i)), compose(s(m, i), s(m + 1, j + 1)),
                     ctx("ss", {m, i, j}));
    law.finish(report);
  }
  {
    LawCollector law("degeneracy-face");
    for (int m = 0; m + 1 <= maxN; ++m)
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= m + 1; ++i) {
          MonotoneMap lhs = compose(s(m, j), d(m + 1, i));
          if (i < j)
            law.expect(lhs, compose(d(m, i), s(m - 1, j - 1)), ctx("sd", {m, i, j}));
          else if (i == j || i == j + 1)
            law.expect(lhs, identity(Ordinal{m}), ctx("sd", {m, i, j}));
          else
            law.expect(lhs, compose(d(m, i - 1), s(m - 1, j)), ctx("sd", {m, i, j}));
        }
    law.finish(report);
  }
  {
    LawCollector law("monoid-associativity");
    const MonotoneMap one0 = identity(Ordinal{0});
    law.expect(compose(multiplication(), ordinal_sum(multiplication(), one0)),
               compose(multiplication(), ordinal_sum(one0, multiplication())), "mu-assoc");
    law.finish(report);
  }
  {
    LawCollector law("monoid-unitality");
    const MonotoneMap one0 = identity(Ordinal{0});
    law.expect(compose(multiplication(), ordinal_sum(unit(), one0)), one0, "mu-left-unit");
    law.expect(compose(multiplication(), ordinal_sum(one0, unit())), one0, "mu-right-unit");
    law.finish(report);
  }
  {
    LawCollector law("face-degeneracy-ordinal-sum");
    for (int n = 1; n <= maxN + 1; ++n)
      for (int i = 0; i < n; ++i) {
        law.expect(face(n, i), face_by_ordinal_sum(n, i), ctx("face", {n, i}));
        law.expect(degeneracy(n, i), degeneracy_by_ordinal_sum(n, i), ctx("degeneracy", {n, i}));
      }
    law.finish(report);
  }

  const int genMax = std::min(maxN, 4);
  const auto gens = generators(genMax);
  {
    LawCollector law("ordinal-sum-unit-associativity");
    const MonotoneMap empty = identity(Ordinal{-1});
    for (const auto& f : gens) {
      law.expect(ordinal_sum(empty, f), f, "left-unit:" + to_string(f));
      law.expect(ordinal_sum(f, empty), f, "right-unit:" + to_string(f));
      for (const auto& g : gens)
        for (const auto& h : gens)
          law.expect(ordinal_sum(ordinal_sum(f, g), h), ordinal_sum(f, ordinal_sum(g, h)),
                     "assoc:" + to_string(f) + "," + to_string(g) + "," + to_string(h));
    }
    law.finish(report);
  }
  {
    LawCollector law("ordinal-sum-bifunctorial");
    std::vector<std::pair<const MonotoneMap*, const MonotoneMap*>> chains;
    for (const auto& f1 : gens)
      for (const auto& f2 : gens)
        if (f1.cod() == f2.dom())
          chains.emplace_back(&f1, &f2);
    for (auto [f1, f2] : chains)
      for (auto [g1, g2] : chains)
        law.expect(ordinal_sum(compose(*f2, *f1), compose(*g2, *g1)),
                   compose(ordinal_sum(*f2, *g2), ordinal_sum(*f1, *g1)),
                   "bifunctor:" + to_string(*f1) + "," + to_string(*g1));
    law.finish(report);
  }
  {
    LawCollector law("face-degeneracy-factorization");
    for (int a = -1; a <= genMax; ++a)
      for (int b = -1; b <= genMax; ++b)
        for (const auto& f : all_maps(Ordinal{a}, Ordinal{b}))
          law.expect(recompose(factorize(f), f.dom()), f, "factor:" + to_string(f));
    law.finish(report);
  }

  {
    LawCollector law("builder-case-split");
    for (int n = 0; n <= maxN; ++n) {
      std::vector<int> src, tgt, idn;
      for (int k = 0; k <= 2 * n; ++k) {
        src.push_back(k <= n ? k : k + 2);
        tgt.push_back(k < n ? k : k + 2);
      }
      for (int k = 0; k <= 2 * n + 2; ++k)
        idn.push_back(k < n ? k : (k <= n + 2 ? n : k - 2));
      law.expect(build_source(n), MonotoneMap(Ordinal{2 * n}, Ordinal{2 * n + 2}, src), ctx("s", {n}));
      law.expect(build_target(n), MonotoneMap(Ordinal{2 * n}, Ordinal{2 * n + 2}, tgt), ctx("t", {n}));
      law.expect(build_identity(n), MonotoneMap(Ordinal{2 * n + 2}, Ordinal{2 * n}, idn), ctx("i", {n}));
    }
    law.finish(report);
  }
  {
    LawCollector law("builder-globular");
    for (int n = 0; n <= maxN; ++n) {
      law.expect(compose(build_source(n + 1), build_source(n)),
                 compose(build_target(n + 1), build_source(n)), ctx("ss=ts", {n}));
      law.expect(compose(build_source(n + 1), build_target(n)),
                 compose(build_target(n + 1), build_target(n)), ctx("st=tt", {n}));
    }
    law.finish(report);
  }
  {
    LawCollector law("builder-reflexive");
    for (int n = 0; n <= maxN; ++n) {
      const MonotoneMap id2n = identity(Ordinal{2 * n});
      law.expect(compose(build_identity(n), build_source(n)), id2n, ctx("is", {n}));
      law.expect(compose(build_identity(n), build_target(n)), id2n, ctx("it", {n}));
    }
    law.finish(report);
  }
  return report;
}

} // namespace eacat::simplex
