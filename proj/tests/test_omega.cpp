#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "eacat/ea_format.hpp"
#include "eacat/error.hpp"
#include "eacat/generators.hpp"
#include "eacat/omega.hpp"
#include "oracles.hpp"

using namespace eacat;
using namespace eacat::omega;

namespace {

Cell cell(std::initializer_list<int> xs) {
  std::vector<ElementId> seq;
  for (int x : xs)
    seq.push_back(id(static_cast<std::size_t>(x)));
  return make_cell(std::move(seq));
}

std::vector<int> ints(const Cell& c) {
  std::vector<int> out;
  for (ElementId e : c.seq)
    out.push_back(static_cast<int>(e.index));
  return out;
}

const char* functor_checks[] = {"hom-preservation", "identity-preservation", "additivity",
                                "composition-preservation"};

} // namespace

TEST_SUITE("omega") {

TEST_CASE("cells are nondecreasing words of odd length") {
  OmegaCategory C(chain(2));
  CHECK(cell({0, 1, 2}).level == 1);
  CHECK(C.is_cell(cell({0, 1, 2})));
  CHECK_FALSE(C.is_cell(cell({0, 2, 1})));
  CHECK(C.label(cell({0, 1, 2})) == "(0,1,2)");
  CHECK_THROWS_AS(make_cell({id(0), id(1)}), Error);
  OmegaCategory B(boolean(2));
  CHECK_FALSE(B.is_cell(cell({1, 2, 3})));  // a and b are incomparable
}

TEST_CASE("cell counts") {
  CHECK(OmegaCategory(chain(1)).enumerate_cells(0).size() == 2);
  CHECK(OmegaCategory(chain(2)).enumerate_cells(1).size() == 10);
  CHECK(OmegaCategory(chain(2)).enumerate_cells(2).size() == 21);
  CHECK(chain_cell_count(3, 1) == 10);
  CHECK(chain_cell_count(3, 2) == 21);

  auto cells = OmegaCategory(chain(2)).enumerate_cells(1);
  CHECK(std::is_sorted(cells.begin(), cells.end()));
}

TEST_CASE("counts agree with brute force on non-chains") {
  for (EffectAlgebra a : {boolean(2), product(chain(2), chain(1)), boolean(3)}) {
    OmegaCategory C(a);
    for (int n = 0; n <= 2; ++n) {
      auto brute = oracle::count_chains_brute(a, 2 * n + 1);
      CHECK(C.enumerate_cells(n).size() == brute);
      CHECK(C.count_cells(n) == brute);
    }
  }
}

TEST_CASE("enumeration guard") {
  OmegaCategory C(chain(6));
  CHECK_FALSE(enumeration_feasible(7, 5));
  CHECK(enumeration_feasible(7, 3));
  CHECK_THROWS_AS(C.enumerate_cells(5), GuardError);
  CHECK_THROWS_AS(C.count_cells(5), GuardError);
  CHECK(C.count_cells(5, true) == oracle::binomial(7 + 10, 11));
}

TEST_CASE("source and target") {
  OmegaCategory C(chain(2));
  CHECK(C.source(cell({0, 1, 2}), 0) == cell({0}));
  CHECK(C.target(cell({0, 1, 2}), 0) == cell({2}));
  CHECK(C.source(cell({0, 1, 1, 2, 2}), 1) == cell({0, 1, 2}));
  CHECK(C.target(cell({0, 1, 1, 2, 2}), 1) == cell({0, 2, 2}));
  CHECK(C.source(cell({0, 1, 1, 2, 2}), 0) == cell({0}));
  CHECK(C.target(cell({0, 1, 1, 2, 2}), 0) == cell({2}));
  CHECK_THROWS_AS(C.source(cell({0, 1, 2}), 1), Error);
  for (const Cell& c : C.enumerate_cells(2))
    for (int i = 0; i < 2; ++i) {
      CHECK(C.source(c, i) == C.source_via_simplex(c, i));
      CHECK(C.target(c, i) == C.target_via_simplex(c, i));
    }
}

TEST_CASE("identities") {
  OmegaCategory C(chain(4));
  CHECK(C.identity(cell({3})) == cell({3, 3, 3}));
  CHECK(C.identity(cell({0})) == cell({0, 0, 0}));
  CHECK(C.identity(cell({0, 1, 2})) == cell({0, 1, 1, 1, 2}));
  CHECK(C.identity_via_simplex(cell({0, 1, 2})) == cell({0, 1, 1, 1, 2}));
  CHECK(C.identity_to(cell({1}), 2) == cell({1, 1, 1, 1, 1}));
  for (const Cell& c : C.enumerate_cells(1)) {
    Cell up = C.identity(c);
    CHECK(C.source(up, 1) == c);
    CHECK(C.target(up, 1) == c);
  }
}

TEST_CASE("composition in C4") {
  OmegaCategory C(chain(4));
  Cell f = cell({2, 3, 4}), g = cell({0, 1, 2});
  CHECK(C.composable(0, f, g));
  CHECK_FALSE(C.composable(0, g, f));
  CHECK(C.compose(0, f, g) == cell({0, 2, 4}));
  CHECK(C.compose_alternative(0, f, g) == cell({0, 2, 4}));
  CHECK_THROWS_AS(C.compose(0, g, f), Error);
  CHECK_THROWS_AS(C.compose(1, f, g), Error);

  for (const Cell& h : C.enumerate_cells(1)) {
    CHECK(C.compose(0, h, C.identity(C.source(h, 0))) == h);
    CHECK(C.compose(0, C.identity(C.target(h, 0)), h) == h);
  }
}

TEST_CASE("composition matches integer arithmetic on chains") {
  OmegaCategory C(chain(3));
  for (int level = 1; level <= 2; ++level) {
    auto cells = C.enumerate_cells(level);
    for (int base = 0; base < level; ++base)
      for (const Cell& f : cells)
        for (const Cell& g : cells)
          if (C.composable(base, f, g))
            CHECK(ints(C.compose(base, f, g)) == oracle::chain_compose(base, ints(f), ints(g)));
  }
}

TEST_CASE("law suites") {
  for (auto [a, level] : {std::pair{chain(3), 2}, std::pair{chain(1), 3}, std::pair{boolean(2), 2}}) {
    AxiomReport r = verify_omega_laws(a, level);
    std::ostringstream out;
    r.print(out);
    CAPTURE(out.str());
    CHECK(r.all_passed());
    CHECK(r.passed("interchange"));
  }
}

TEST_CASE("law suite output is independent of the worker count") {
  auto text = [](unsigned jobs) {
    std::ostringstream out;
    verify_omega_laws(product(chain(1), chain(2)), 2, {jobs, false}).print(out);
    return out.str();
  };
  CHECK(text(4) == text(1));
}

TEST_CASE("law suite on an invalid table stops at the axioms") {
  EffectAlgebra bad = parse_ea_string("ea 1\nelements 0 a one\none one\n"
                                      "sum 0 0 0\nsum 0 a a\nsum 0 one one\nsum a one a\n");
  AxiomReport r = verify_omega_laws(bad, 1);
  REQUIRE(r.checks().size() == 1);
  CHECK(r.checks()[0].id == "effect-algebra");
  CHECK(r.checks()[0].verdict == Verdict::Fail);
}

TEST_CASE("law suite refuses past the guard") {
  AxiomReport r = verify_omega_laws(chain(6), 5);
  CHECK(r.find("enumeration")->verdict == Verdict::Refused);
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("hom algebras") {
  EffectAlgebra c4 = chain(4);
  IntervalAlgebra h = hom_algebra(c4, id(1), id(3));
  CHECK(h.embedding == std::vector<ElementId>{id(1), id(2), id(3)});
  for (std::size_t x = 0; x < 5; ++x)
    CHECK(hom_algebra(c4, id(x), id(x)).algebra.size() == 1);
  CHECK_THROWS_AS(hom_algebra(c4, id(3), id(1)), Error);

  GenMorphism comp = composition_morphism(c4, id(0), id(1), id(3));
  CHECK(comp.source.size() == 6);
  CHECK(is_generalized_d_monotonic(check_generalized_morphism(comp)));
  for (EffectAlgebra a : {chain(3), boolean(2)}) {
    DPoset d = derive_dposet(a);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y)
        for (std::size_t z = 0; z < a.size(); ++z)
          if (d.leq(id(x), id(y)) && d.leq(id(y), id(z)))
            CHECK(is_generalized_d_monotonic(
                check_generalized_morphism(composition_morphism(a, id(x), id(y), id(z)))));
  }
}

TEST_CASE("functors") {
  EffectAlgebra c2 = chain(2), c4 = chain(4);
  LiftedFunctor doubling = lift_functor({c2, c4, {id(0), id(2), id(4)}});
  CHECK(doubling.apply(cell({0, 1, 2})) == cell({0, 2, 4}));
  AxiomReport r = check_functor(doubling);
  for (const char* c : functor_checks)
    CHECK(r.passed(c));

  AxiomReport idr = check_functor(lift_functor({c4, c4, {id(0), id(1), id(2), id(3), id(4)}}));
  CHECK(idr.all_passed());

  EffectAlgebra b2 = boolean(2);
  AxiomReport constant = check_functor(lift_functor({b2, c2, std::vector<ElementId>(4, id(0))}));
  for (const char* c : functor_checks)
    CHECK(constant.passed(c));
  CHECK_FALSE(constant.passed("preserves-top"));

  // 1 ↦ 3 in C2 → C4 is monotone but breaks differences, so additivity fails
  AxiomReport bad = check_functor(lift_functor({c2, c4, {id(0), id(3), id(4)}}));
  CHECK_FALSE(bad.passed("additivity"));
}

TEST_CASE("strict monoidality") {
  EffectAlgebra c1 = chain(1), c2 = chain(2);
  EffectAlgebra p11 = product(c1, c1);
  CHECK(hom_algebra(p11, pair_id(c1, id(0), id(0)), pair_id(c1, id(1), id(1))).algebra.size() == 4);
  EffectAlgebra p21 = product(c2, c1);
  CHECK(hom_algebra(p21, pair_id(c1, id(0), id(0)), pair_id(c1, id(2), id(1))).algebra.size() == 6);
  CHECK(check_monoidality(c1, c1).all_passed());
  CHECK(check_monoidality(c2, c1).all_passed());
  CHECK(check_monoidality(c2, c2).all_passed());
  CHECK(check_monoidality(boolean(2), c1).all_passed());
}

} // TEST_SUITE
