#include <doctest.h>

#include "eacat/error.hpp"
#include "eacat/simplex.hpp"

using namespace eacat;
using namespace eacat::simplex;

namespace {

MonotoneMap map(int dom, int cod, std::vector<int> images) {
  return MonotoneMap(Ordinal{dom}, Ordinal{cod}, std::move(images));
}

} // namespace

TEST_SUITE("simplex") {

TEST_CASE("maps validate their images") {
  CHECK_THROWS_AS(map(1, 1, {1, 0}), Error);
  CHECK_THROWS_AS(map(1, 1, {0}), Error);
  CHECK_THROWS_AS(map(0, 1, {2}), Error);
  CHECK_THROWS_AS(map(-2, 0, {}), Error);
  CHECK(map(-1, 3, {}).images().empty());
  CHECK(to_string(map(1, 2, {0, 2})) == "[1]->[2](0,2)");
}

TEST_CASE("composition") {
  CHECK(compose(face(3, 2), face(2, 1)) == map(0, 2, {0}));
  CHECK(compose(degeneracy(1, 0), face(2, 0)) == identity(Ordinal{0}));
  for (const MonotoneMap& f : all_maps(Ordinal{2}, Ordinal{3})) {
    CHECK(compose(f, identity(Ordinal{2})) == f);
    CHECK(compose(identity(Ordinal{3}), f) == f);
  }
  CHECK_THROWS_AS(compose(face(2, 0), face(2, 0)), Error);
}

TEST_CASE("ordinal sum") {
  CHECK(ordinal_sum(Ordinal{1}, Ordinal{0}) == Ordinal{2});
  CHECK(ordinal_sum(Ordinal{-1}, Ordinal{-1}) == Ordinal{-1});
  CHECK(ordinal_sum(unit(), identity(Ordinal{0})) == map(0, 1, {1}));
  CHECK(ordinal_sum(identity(Ordinal{0}), unit()) == map(0, 1, {0}));
  for (const MonotoneMap& f : all_maps(Ordinal{1}, Ordinal{2})) {
    CHECK(ordinal_sum(identity(Ordinal{-1}), f) == f);
    CHECK(ordinal_sum(f, identity(Ordinal{-1})) == f);
  }
  CHECK(ordinal_sum({identity(Ordinal{0}), unit(), unit(), identity(Ordinal{0})}) == map(1, 3, {0, 3}));
}

TEST_CASE("bifunctoriality on all small maps") {
  for (const auto& f1 : all_maps(Ordinal{0}, Ordinal{1}))
    for (const auto& f2 : all_maps(Ordinal{1}, Ordinal{1}))
      for (const auto& g1 : all_maps(Ordinal{-1}, Ordinal{1}))
        for (const auto& g2 : all_maps(Ordinal{1}, Ordinal{0}))
          CHECK(ordinal_sum(compose(f2, f1), compose(g2, g1)) ==
                compose(ordinal_sum(f2, g2), ordinal_sum(f1, g1)));
}

TEST_CASE("faces and degeneracies") {
  CHECK(face(2, 1) == map(0, 1, {0}));
  CHECK(face(2, 0) == map(0, 1, {1}));
  CHECK(face(1, 0) == map(-1, 0, {}));
  CHECK(degeneracy(2, 0) == map(2, 1, {0, 0, 1}));
  CHECK(degeneracy(1, 0) == map(1, 0, {0, 0}));
  CHECK(face(4, 2) == map(2, 3, {0, 1, 3}));
  CHECK(degeneracy(3, 1) == map(3, 2, {0, 1, 1, 2}));
  CHECK_THROWS_AS(face(2, 2), Error);
  CHECK_THROWS_AS(face(0, 0), Error);
  CHECK_THROWS_AS(degeneracy(2, 2), Error);
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i < n; ++i) {
      CHECK(face(n, i) == face_by_ordinal_sum(n, i));
      CHECK(degeneracy(n, i) == degeneracy_by_ordinal_sum(n, i));
    }
}

TEST_CASE("source, target and identity builders") {
  CHECK(build_source(1) == map(2, 4, {0, 1, 4}));
  CHECK(build_target(1) == map(2, 4, {0, 3, 4}));
  CHECK(build_identity(1) == map(4, 2, {0, 1, 1, 1, 2}));
  CHECK(build_source(0) == map(0, 2, {0}));
  CHECK(build_target(0) == map(0, 2, {2}));
  CHECK(build_identity(0) == map(2, 0, {0, 0, 0}));
  CHECK(compose(build_source(1), build_source(0)) == compose(build_target(1), build_source(0)));
  CHECK(compose(build_source(1), build_source(0)).dom() == Ordinal{0});
  CHECK(compose(build_source(1), build_source(0)).cod() == Ordinal{4});
  for (int n = 0; n <= 4; ++n) {
    CHECK(compose(build_identity(n), build_source(n)) == identity(Ordinal{2 * n}));
    CHECK(compose(build_identity(n), build_target(n)) == identity(Ordinal{2 * n}));
  }
}

TEST_CASE("monoid ([0], u, mu)") {
  const MonotoneMap one = identity(Ordinal{0});
  CHECK(compose(multiplication(), ordinal_sum(one, unit())) == one);
  CHECK(compose(multiplication(), ordinal_sum(unit(), one)) == one);
  CHECK(compose(multiplication(), ordinal_sum(multiplication(), one)) ==
        compose(multiplication(), ordinal_sum(one, multiplication())));
  CHECK(multiplication2() == map(2, 0, {0, 0, 0}));
}

TEST_CASE("factorization into degeneracies then faces") {
  for (int d = -1; d <= 4; ++d)
    for (int c = -1; c <= 4; ++c)
      for (const MonotoneMap& f : all_maps(Ordinal{d}, Ordinal{c})) {
        Factorization fac = factorize(f);
        CHECK(recompose(fac, f.dom()) == f);
        for (std::size_t k = 1; k < fac.faces.size(); ++k)
          CHECK(fac.faces[k - 1].cod().n < fac.faces[k].cod().n);
      }
  CHECK(all_maps(Ordinal{2}, Ordinal{2}).size() == 10);
  CHECK(all_maps(Ordinal{-1}, Ordinal{-1}).size() == 1);
  CHECK(all_maps(Ordinal{0}, Ordinal{-1}).empty());
}

TEST_CASE("law suite") {
  CHECK(check_simplex_laws(5).all_passed());
  AxiomReport r = check_simplex_laws(6);
  CHECK(r.all_passed());
  CHECK(r.passed("face-face"));
  CHECK(r.passed("builder-globular"));
  CHECK_THROWS_AS(check_simplex_laws(9), Error);
}

} // TEST_SUITE
