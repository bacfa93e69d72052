#include <doctest.h>

#include "eacat/error.hpp"
#include "eacat/generators.hpp"
#include "eacat/hilbert.hpp"
#include "oracles.hpp"

using namespace eacat;

namespace {

Rational q(int n, int d) { return Rational(n, d); }

const RatMatrix P0 = RatMatrix::diagonal({1, 0});
const RatMatrix P1 = RatMatrix::diagonal({0, 1});
const RatMatrix Half = RatMatrix::scalar(2, q(1, 2));
const RatMatrix Plus{{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}};

std::size_t index_of(const EffectModel& m, const RatMatrix& x) {
  for (std::size_t k = 0; k < m.elements.size(); ++k)
    if (m.elements[k] == x)
      return k;
  FAIL("matrix not in model");
  return 0;
}

} // namespace

TEST_SUITE("hilbert") {

TEST_CASE("exact complex arithmetic") {
  ComplexRational i(0, 1);
  CHECK(i * i == ComplexRational(-1));
  CHECK(ComplexRational(1, 1) / ComplexRational(1, -1) == i);
  CHECK_THROWS_AS(ComplexRational(1) / ComplexRational(0), Error);
  CHECK(to_string(ComplexRational(q(2, 4), q(-1, 3))) == "1/2-1/3i");
  CHECK(to_string(ComplexRational(0, -1)) == "-i");
  CHECK(Rational(2, 4) == q(1, 2));
}

TEST_CASE("matrix arithmetic") {
  RatMatrix a{{1, 2}, {3, 4}};
  RatMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == RatMatrix{{2, 1}, {4, 3}});
  CHECK(a + b == RatMatrix{{1, 3}, {4, 4}});
  CHECK(a - a == RatMatrix::zero(2));
  CHECK(a.trace() == ComplexRational(5));
  RatMatrix c{{1, ComplexRational(0, 1)}, {0, 1}};
  CHECK(c.adjoint() == RatMatrix{{1, 0}, {ComplexRational(0, -1), 1}});
  CHECK_FALSE(is_hermitian(c));
  CHECK_THROWS_AS(a + RatMatrix::identity(3), Error);
  CHECK_THROWS_AS((RatMatrix{{1, 2}, {3}}), Error);
}

TEST_CASE("projections") {
  CHECK(is_projection(P0));
  CHECK(is_projection(Plus));
  CHECK_FALSE(is_projection(Half));
  CHECK(is_projection(RatMatrix::zero(3)));
  CHECK(is_projection(RatMatrix::identity(3)));
  // idempotent but not self-adjoint
  CHECK_FALSE(is_projection(RatMatrix{{1, 1}, {0, 0}}));
  RatMatrix complexProj{{q(1, 2), ComplexRational(0, q(-1, 2))}, {ComplexRational(0, q(1, 2)), q(1, 2)}};
  CHECK(is_projection(complexProj));
}

TEST_CASE("positive semidefiniteness") {
  CHECK(is_psd(RatMatrix{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_psd(RatMatrix{{1, 2}, {2, 1}}));
  CHECK(is_psd(RatMatrix::zero(2)));
  CHECK(is_psd(RatMatrix{{1, 1}, {1, 1}}));
  CHECK_FALSE(is_psd(RatMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_psd(RatMatrix{{1, 1}, {0, 1}}));  // not Hermitian
  CHECK_FALSE(is_psd(RatMatrix::diagonal({1, -1, 0})));
  // det(λI + M) for [[2,1],[1,2]] is λ² + 4λ + 3
  auto c = shifted_char_poly(RatMatrix{{2, 1}, {1, 2}});
  CHECK(c == std::vector<ComplexRational>{1, 4, 3});
}

TEST_CASE("proj_oplus") {
  CHECK(proj_oplus(P0, P1) == RatMatrix::identity(2));
  CHECK_FALSE(proj_oplus(P0, P0).has_value());
  CHECK_FALSE(proj_oplus(P0, Plus).has_value());
  CHECK_THROWS_AS(proj_oplus(Half, P0), Error);
}

TEST_CASE("proj_oplus is defined exactly on orthogonal pairs") {
  std::vector<RatMatrix> ps{RatMatrix::zero(2), P0, P1, Plus, RatMatrix::identity(2),
                            RatMatrix::identity(2) - Plus,
                            RatMatrix{{q(1, 5), q(2, 5)}, {q(2, 5), q(4, 5)}},
                            RatMatrix{{q(4, 5), q(-2, 5)}, {q(-2, 5), q(1, 5)}}};
  for (const auto& p : ps) {
    REQUIRE(is_projection(p));
    for (const auto& r : ps) {
      bool orthogonal = p * r == RatMatrix::zero(2) && r * p == RatMatrix::zero(2);
      CHECK(proj_oplus(p, r).has_value() == orthogonal);
    }
  }
}

TEST_CASE("bound_oplus") {
  CHECK(bound_oplus(Half, Half) == RatMatrix::identity(2));
  CHECK_FALSE(bound_oplus(RatMatrix::scalar(2, q(3, 4)), Half).has_value());
  CHECK(bound_oplus(RatMatrix::diagonal({q(1, 2), 0}), RatMatrix::diagonal({q(1, 4), q(3, 4)})) ==
        RatMatrix::diagonal({q(3, 4), q(3, 4)}));
  CHECK_THROWS_AS(bound_oplus(RatMatrix::scalar(2, 2), Half), Error);
  CHECK_THROWS_AS(bound_oplus(RatMatrix{{1, 2}, {2, 1}}, Half), Error);
}

TEST_CASE("projection model from diag(1,0)") {
  EffectModel m = extract_algebra({P0}, ModelKind::Projection, 2);
  CHECK(m.elements.size() == 4);
  CHECK(m.elements[0] == RatMatrix::zero(2));
  CHECK(m.elements[1] == RatMatrix::identity(2));
  CHECK(m.elements[2] == P0);
  CHECK(m.elements[3] == P1);
  CHECK(isomorphic(m.algebra, boolean(2)));
  CHECK(oracle::isomorphic(m.algebra, boolean(2)));
  CHECK(check_effect_axioms(m.algebra).all_passed());
  CHECK(check_orthoalgebra(m.algebra).all_passed());
  CHECK(m.algebra.name(id(0)) == "0");
  CHECK(m.algebra.name(id(1)) == "1");
  CHECK(m.algebra.name(id(2)) == "[[1,0],[0,0]]");
}

TEST_CASE("bounded model from half the identity") {
  EffectModel m = extract_algebra({Half}, ModelKind::Bounded, 2);
  CHECK(m.elements.size() == 3);
  CHECK(index_of(m, Half) == 2);
  CHECK(isomorphic(m.algebra, chain(2)));
  AxiomReport r = check_orthoalgebra(m.algebra);
  CHECK_FALSE(r.all_passed());
  CHECK(r.find("orthoalgebra")->witness == Witness{to_string(Half)});
}

TEST_CASE("empty seed set") {
  EffectModel m = extract_algebra({}, ModelKind::Projection, 2);
  CHECK(m.elements.size() == 2);
  CHECK(isomorphic(m.algebra, chain(1)));
  CHECK(check_orthoalgebra(chain(1)).all_passed());
}

TEST_CASE("extracted algebras are valid and mirror matrix addition") {
  std::vector<std::pair<std::vector<RatMatrix>, ModelKind>> cases{
      {{P0, Plus}, ModelKind::Projection},
      {{RatMatrix::diagonal({1, 0, 0}), RatMatrix::diagonal({0, 1, 0})}, ModelKind::Projection},
      {{RatMatrix::scalar(2, q(1, 3))}, ModelKind::Bounded},
      {{RatMatrix::diagonal({q(1, 2), 0}), RatMatrix::diagonal({q(1, 4), q(3, 4)})}, ModelKind::Bounded},
  };
  for (const auto& [seeds, kind] : cases) {
    EffectModel m = extract_algebra(seeds, kind, seeds.front().dim());
    REQUIRE(check_effect_axioms(m.algebra).all_passed());
    CHECK(effect_from_dposet(derive_dposet(m.algebra)).same_structure(m.algebra));
    const std::size_t n = m.elements.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (auto c = m.algebra.sum(id(a), id(b)))
          CHECK(m.elements[a] + m.elements[b] == m.elements[c->index]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        CHECK_FALSE(m.elements[a] == m.elements[b]);
    if (kind == ModelKind::Projection) {
      // P ≤ Q iff QP = P
      DPoset d = derive_dposet(m.algebra);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          CHECK(d.leq(id(a), id(b)) == (m.elements[b] * m.elements[a] == m.elements[a]));
    }
  }
  // two non-commuting projections on C^2 only generate two blocks of B2
  EffectModel two = extract_algebra({P0, Plus}, ModelKind::Projection, 2);
  CHECK(two.elements.size() == 6);
}

TEST_CASE("closure cap and invalid seeds") {
  CHECK_THROWS_AS(extract_algebra({RatMatrix::scalar(2, q(1, 7))}, ModelKind::Bounded, 2, 5), GuardError);
  CHECK(extract_algebra({RatMatrix::scalar(2, q(1, 7))}, ModelKind::Bounded, 2).elements.size() == 8);
  CHECK_THROWS_AS(extract_algebra({Half}, ModelKind::Projection, 2), Error);
  CHECK_THROWS_AS(extract_algebra({P0}, ModelKind::Projection, 3), Error);
  CHECK_THROWS_AS(extract_algebra({RatMatrix::scalar(2, 2)}, ModelKind::Bounded, 2), Error);
}

TEST_CASE("interval suborthoalgebras") {
  CHECK(check_interval_suborthoalgebra(boolean(2)).all_passed());
  CHECK(check_interval_suborthoalgebra(boolean(3)).all_passed());
  CHECK(check_interval_suborthoalgebra(extract_algebra({P0}, ModelKind::Projection, 2).algebra).all_passed());
  CHECK(check_interval_suborthoalgebra(chain(0)).all_passed());
  IntervalAlgebra z = interval(boolean(2), id(0), id(0));
  CHECK(z.algebra.size() == 1);
  CHECK(check_orthoalgebra(z.algebra).all_passed());
  AxiomReport bad = check_interval_suborthoalgebra(chain(2));
  CHECK(bad.find("precondition-orthoalgebra")->verdict == Verdict::Fail);
  CHECK(bad.find("precondition-orthoalgebra")->witness == Witness{"1"});
  CHECK(bad.find("interval-closure") == nullptr);
}

TEST_CASE("pullback squares") {
  CHECK(check_pullback_theorem(boolean(2)).all_passed());
  CHECK(check_pullback_theorem(boolean(3)).all_passed());
  CHECK(check_pullback_theorem(extract_algebra({P0}, ModelKind::Projection, 2).algebra).all_passed());
  CHECK(check_pullback_theorem(extract_algebra({P0, Plus}, ModelKind::Projection, 2).algebra).all_passed());
  AxiomReport c2 = check_pullback_theorem(chain(2));
  CHECK(c2.find("precondition-orthoalgebra")->verdict == Verdict::Fail);
  CHECK(c2.find("pullback") == nullptr);
  CHECK_FALSE(c2.all_passed());
}

TEST_CASE("sign test agrees with elimination on the corpus") {
  auto corpus = oracle::hermitian_corpus(120, 20240531u);
  std::size_t psd = 0;
  for (const RatMatrix& m : corpus) {
    CAPTURE(to_string(m));
    bool expect = oracle::ldl_psd(m);
    CHECK(is_psd(m) == expect);
    psd += expect;
  }
  CHECK(psd > 10);
  CHECK(psd < corpus.size() - 10);
}

} // TEST_SUITE
