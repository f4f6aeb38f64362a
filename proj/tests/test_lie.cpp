#include <catch2/catch_amalgamated.hpp>

#include "cocycle/lie_algebra.hpp"
#include "helpers.hpp"

using namespace cocycle;
using namespace testhelpers;

TEST_CASE("validate abelian") {
  auto rep = validate(LieAlgebra::abelian(3));
  CHECK(rep.jacobi_ok);
  CHECK(rep.nilpotent);
  CHECK(rep.nilpotency_class == 1);
  CHECK(rep.integral);
}

TEST_CASE("validate heisenberg") {
  auto rep = validate(heisenberg());
  CHECK(rep.jacobi_ok);
  CHECK(rep.nilpotent);
  CHECK(rep.nilpotency_class == 2);
}

TEST_CASE("validate perturbed heisenberg lists the violated triple") {
  auto rep = validate(perturbed_heisenberg());
  CHECK_FALSE(rep.jacobi_ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].i == 0);
  CHECK(rep.violations[0].j == 1);
  CHECK(rep.violations[0].k == 2);
  CHECK(rep.violations[0].defect == std::vector<Rat>{Rat(0), Rat(0), Rat(-1)});
}

TEST_CASE("oscillator is solvable but not nilpotent") {
  auto [L, b] = oscillator();
  auto rep = validate(L);
  CHECK(rep.jacobi_ok);
  CHECK_FALSE(rep.nilpotent);
}

TEST_CASE("rational structure constants flagged") {
  LieAlgebra L(2, {"a", "b"});
  L.set_bracket(0, 1, {make_rat(1, 2), Rat(0)});
  auto rep = validate(L);
  CHECK(rep.jacobi_ok);
  CHECK_FALSE(rep.integral);
}

TEST_CASE("ce differential worked examples") {
  LieAlgebra h = heisenberg();
  RatMat d1 = ce_differential(h, 1);
  CHECK(rank(d1) == 1);
  // dz* = -x* ^ y*: row (0,1), column z
  CHECK(d1(0, 2) == Rat(-1));
  CHECK(ce_differential(h, 2).is_zero());

  LieAlgebra ab = LieAlgebra::abelian(4);
  for (int k = 0; k <= 4; ++k) CHECK(ce_differential(ab, k).is_zero());

  CHECK_THROWS_AS(ce_differential(h, 4), parse_error);
  CHECK_THROWS_AS(ce_differential(h, -1), parse_error);
}

TEST_CASE("d after d is zero") {
  std::vector<LieAlgebra> fixtures{heisenberg(), LieAlgebra::abelian(3), oscillator().first};
  for (const auto& L : fixtures)
    for (int k = 0; k + 1 <= L.dim(); ++k) {
      RatMat dd = ce_differential(L, k + 1) * ce_differential(L, k);
      CHECK(dd.is_zero());
    }
}

TEST_CASE("betti numbers") {
  CHECK(betti_sequence(heisenberg()) == std::vector<size_t>{1, 2, 2, 1});
  for (int n = 1; n <= 6; ++n) {
    LieAlgebra ab = LieAlgebra::abelian(n);
    for (int k = 0; k <= n; ++k) CHECK(betti(ab, k) == (size_t)binomial(n, k));
  }
  auto [osc, form] = oscillator();
  CHECK(betti(osc, 0) == 1);
  CHECK(betti(osc, 1) == 1);  // dim g/[g,g]: derived ideal is span{f,e1,e2}
}

TEST_CASE("euler characteristic vanishes") {
  for (const auto& L : {heisenberg(), LieAlgebra::abelian(4), oscillator().first}) {
    long chi = 0;
    auto b = betti_sequence(L);
    for (size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * (long)b[k];
    CHECK(chi == 0);
  }
}

TEST_CASE("poincare duality for unimodular fixtures") {
  for (const auto& L : {heisenberg(), LieAlgebra::abelian(5), oscillator().first}) {
    auto b = betti_sequence(L);
    for (size_t k = 0; k < b.size(); ++k) CHECK(b[k] == b[b.size() - 1 - k]);
  }
}

TEST_CASE("bracket storage rejects bad input") {
  LieAlgebra L(2, {"a", "b"});
  CHECK_THROWS_AS(L.set_bracket(0, 0, {Rat(0), Rat(0)}), parse_error);
  CHECK_THROWS_AS(L.set_bracket(0, 5, {Rat(0), Rat(0)}), parse_error);
  CHECK_THROWS_AS(L.set_bracket(0, 1, {Rat(0)}), parse_error);
}
