#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "cocycle/cech.hpp"
#include "helpers.hpp"

using namespace cocycle;
using testhelpers::rp2_nerve;
using testhelpers::solid_tetra;
using testhelpers::tetra_boundary;
using testhelpers::torus_nerve;
using testhelpers::triangle_nerve;

namespace {

bool same_values(const AbCochain& a, const AbCochain& b) { return is_zero(a - b); }

// edge cochain c({i,j}) = w(j - i) on the 7-vertex torus; closed whenever
// w3 = w1 + w2, w5 = w1 + w4, w6 = w2 + w4, which the helper enforces
AbCochain symmetric_torus_cochain(const Nerve& t, const Rat& w1, const Rat& w2, const Rat& w4,
                                  const Coefficients& coeffs) {
  std::array<Rat, 7> w;
  w[1] = w1;
  w[2] = w2;
  w[4] = w4;
  w[3] = w1 + w2;
  w[5] = w1 + w4;
  w[6] = w2 + w4;
  AbCochain c = AbCochain::zero(t, 1, coeffs);
  for (const auto& e : t.simplices(1))
    c.values[t.index_of(e)] = coeffs.normalize(w[(size_t)(e[1] - e[0])]);
  return c;
}

AbCochain to_ab(const Nerve& n, const GroupCochain& c, int m) {
  AbCochain out = AbCochain::zero(n, c.degree, Coefficients::Zmod(m));
  for (size_t i = 0; i < c.values.size(); ++i) out.values[i] = Rat(c.values[i]);
  return out;
}

}  // namespace

TEST_CASE("cohomology of the 2-sphere and contractible complexes") {
  Nerve sphere = tetra_boundary();
  CHECK(cohomology(sphere, 0, Coefficients::Z()).betti == 1);
  CHECK(cohomology(sphere, 1, Coefficients::Z()).betti == 0);
  CHECK(cohomology(sphere, 1, Coefficients::Z()).torsion.empty());
  auto h2 = cohomology(sphere, 2, Coefficients::Z());
  CHECK(h2.betti == 1);
  CHECK(h2.torsion.empty());
  CHECK(cohomology(sphere, 3, Coefficients::Z()).betti == 0);

  Nerve disk = triangle_nerve();
  CHECK(cohomology(disk, 0, Coefficients::Z()).betti == 1);
  CHECK(cohomology(disk, 1, Coefficients::Z()).betti == 0);

  Nerve ball = Nerve::from_facets({{0, 1, 2, 3, 4}});
  CHECK(cohomology(ball, 0, Coefficients::Q()).betti == 1);
  for (int k = 1; k <= 4; ++k) {
    auto h = cohomology(ball, k, Coefficients::Z());
    CHECK(h.betti == 0);
    CHECK(h.torsion.empty());
  }
}

TEST_CASE("projective plane sees its 2-torsion") {
  Nerve plane = rp2_nerve();
  CHECK(cohomology(plane, 0, Coefficients::Z()).betti == 1);
  auto h1 = cohomology(plane, 1, Coefficients::Z());
  CHECK(h1.betti == 0);
  CHECK(h1.torsion.empty());
  auto h2 = cohomology(plane, 2, Coefficients::Z());
  CHECK(h2.betti == 0);
  REQUIRE(h2.torsion.size() == 1);
  CHECK(h2.torsion[0] == 2);

  // rational cohomology is trivial above degree 0
  CHECK(cohomology(plane, 1, Coefficients::Q()).betti == 0);
  CHECK(cohomology(plane, 2, Coefficients::Q()).betti == 0);

  // mod 2 the torsion shows up in degrees 1 and 2, mod 3 nothing survives
  CHECK(cohomology(plane, 0, Coefficients::Zmod(2)).betti == 1);
  CHECK(cohomology(plane, 1, Coefficients::Zmod(2)).betti == 1);
  CHECK(cohomology(plane, 2, Coefficients::Zmod(2)).betti == 1);
  CHECK(cohomology(plane, 1, Coefficients::Zmod(3)).betti == 0);
  CHECK(cohomology(plane, 2, Coefficients::Zmod(3)).betti == 0);
}

TEST_CASE("torus cohomology over several coefficient rings") {
  Nerve torus = torus_nerve();
  CHECK(cohomology(torus, 0, Coefficients::Z()).betti == 1);
  auto h1 = cohomology(torus, 1, Coefficients::Z());
  CHECK(h1.betti == 2);
  CHECK(h1.torsion.empty());
  auto h2 = cohomology(torus, 2, Coefficients::Z());
  CHECK(h2.betti == 1);
  CHECK(h2.torsion.empty());
  CHECK(cohomology(torus, 1, Coefficients::Q()).betti == 2);
  CHECK(cohomology(torus, 1, Coefficients::Zmod(2)).betti == 2);
  CHECK(cohomology(torus, 2, Coefficients::Zmod(2)).betti == 1);
}

TEST_CASE("unsupported coefficient requests are parse errors") {
  Nerve torus = torus_nerve();
  CHECK_THROWS_AS(cohomology(torus, 1, Coefficients::Zmod(6)), parse_error);
  CHECK_THROWS_AS(cohomology(torus, 1, Coefficients::Zmod(4)), parse_error);
  CHECK_THROWS_AS(cohomology(torus, 9, Coefficients::Zmod(6)), parse_error);
  CHECK_THROWS_AS(cohomology(torus, 1, Coefficients::Qmod1()), parse_error);
  CHECK_THROWS_AS(cohomology(torus, -1, Coefficients::Z()), parse_error);
}

TEST_CASE("coboundary shifts are recognized with an explicit witness") {
  Nerve plane = rp2_nerve();
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coin(-6, 6);

  std::vector<Coefficients> rings = {Coefficients::Z(), Coefficients::Q(), Coefficients::Zmod(5),
                                     Coefficients::Qmod1()};
  for (const auto& ring : rings) {
    for (int trial = 0; trial < 10; ++trial) {
      bool circle = ring.kind == CoeffKind::rationals_mod1;
      AbCochain c = AbCochain::zero(plane, 1, ring);
      AbCochain b = AbCochain::zero(plane, 0, ring);
      for (auto& v : c.values) v = ring.normalize(circle ? make_rat(coin(rng), 7) : Rat(coin(rng)));
      for (auto& v : b.values) v = ring.normalize(circle ? make_rat(coin(rng), 3) : Rat(coin(rng)));

      AbCochain shifted = twist_by_coboundary(plane, c, b);
      auto witness = are_cohomologous(plane, c, shifted);
      REQUIRE(witness.has_value());
      CHECK(same_values(twist_by_coboundary(plane, c, *witness), shifted));
    }
  }
}

TEST_CASE("top classes of the sphere are separated by the fundamental cycle") {
  Nerve sphere = tetra_boundary();
  AbCochain e012 = AbCochain::zero(sphere, 2, Coefficients::Z());
  AbCochain e013 = AbCochain::zero(sphere, 2, Coefficients::Z());
  e012.values[sphere.index_of({0, 1, 2})] = Rat(1);
  e013.values[sphere.index_of({0, 1, 3})] = Rat(1);

  CHECK_FALSE(are_cohomologous(sphere, AbCochain::zero(sphere, 2, Coefficients::Z()), e012));
  CHECK_FALSE(are_cohomologous(sphere, e012, e013));

  // the boundary orientation pairs (0,1,2) and (0,1,3) with opposite signs
  AbCochain minus013 = AbCochain::zero(sphere, 2, Coefficients::Z()) - e013;
  auto witness = are_cohomologous(sphere, e012, minus013);
  REQUIRE(witness.has_value());
  CHECK(same_values(twist_by_coboundary(sphere, e012, *witness), minus013));

  // same separation rationally
  CHECK_FALSE(are_cohomologous(sphere, AbCochain::zero(sphere, 2, Coefficients::Q()),
                               induced_abelian(sphere, e012, Coefficients::Q(), Rat(1))));
}

TEST_CASE("degree-one classes on the torus") {
  Nerve torus = torus_nerve();
  AbCochain zero_z = AbCochain::zero(torus, 1, Coefficients::Z());
  AbCochain ca = symmetric_torus_cochain(torus, Rat(1), Rat(0), Rat(0), Coefficients::Z());
  AbCochain cb = symmetric_torus_cochain(torus, Rat(0), Rat(1), Rat(0), Coefficients::Z());
  AbCochain cexact = symmetric_torus_cochain(torus, Rat(1), Rat(2), Rat(4), Coefficients::Z());

  CHECK(is_zero(coboundary(torus, ca)));
  CHECK(is_zero(coboundary(torus, cb)));
  CHECK(is_zero(coboundary(torus, cexact)));

  // c({i,j}) = j - i is the coboundary of the height function i -> i
  auto witness = are_cohomologous(torus, zero_z, cexact);
  REQUIRE(witness.has_value());
  CHECK(same_values(twist_by_coboundary(torus, zero_z, *witness), cexact));

  CHECK_FALSE(are_cohomologous(torus, zero_z, ca));
  CHECK_FALSE(are_cohomologous(torus, zero_z, cb));
  CHECK_FALSE(are_cohomologous(torus, ca, cb));

  // the same story persists mod 7
  AbCochain zero7 = AbCochain::zero(torus, 1, Coefficients::Zmod(7));
  CHECK_FALSE(are_cohomologous(torus, zero7,
                               symmetric_torus_cochain(torus, Rat(1), Rat(0), Rat(0),
                                                       Coefficients::Zmod(7))));
  CHECK(are_cohomologous(torus, zero7,
                         symmetric_torus_cochain(torus, Rat(1), Rat(2), Rat(4),
                                                 Coefficients::Zmod(7)))
            .has_value());

  // circle-valued: 1/7 of the exact class unwinds mod 1, the primitive class
  // does not because it is not divisible by 7 integrally
  AbCochain zero_q1 = AbCochain::zero(torus, 1, Coefficients::Qmod1());
  CHECK(are_cohomologous(torus, zero_q1,
                         symmetric_torus_cochain(torus, make_rat(1, 7), make_rat(2, 7),
                                                 make_rat(4, 7), Coefficients::Qmod1()))
            .has_value());
  CHECK_FALSE(are_cohomologous(torus, zero_q1,
                               symmetric_torus_cochain(torus, make_rat(1, 7), Rat(0), Rat(0),
                                                       Coefficients::Qmod1())));
}

TEST_CASE("equivalence guards") {
  Nerve sphere = tetra_boundary();
  AbCochain a = AbCochain::zero(sphere, 1, Coefficients::Z());
  AbCochain b = AbCochain::zero(sphere, 2, Coefficients::Z());
  CHECK_THROWS_AS(are_cohomologous(sphere, a, b), parse_error);
  AbCochain c = AbCochain::zero(sphere, 1, Coefficients::Q());
  CHECK_THROWS_AS(are_cohomologous(sphere, a, c), parse_error);

  // degree zero: equivalent means equal
  AbCochain f = AbCochain::zero(sphere, 0, Coefficients::Z());
  AbCochain g = f;
  CHECK(are_cohomologous(sphere, f, g).has_value());
  g.values[0] = Rat(1);
  CHECK_FALSE(are_cohomologous(sphere, f, g));
}

TEST_CASE("coefficient maps commute with the coboundary") {
  Nerve plane = rp2_nerve();
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coin(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    AbCochain c = AbCochain::zero(plane, 1, Coefficients::Z());
    for (auto& v : c.values) v = Rat(coin(rng));

    AbCochain tripled = induced_abelian(plane, c, Coefficients::Z(), Rat(3));
    CHECK(same_values(coboundary(plane, tripled),
                      induced_abelian(plane, coboundary(plane, c), Coefficients::Z(), Rat(3))));

    AbCochain quarters = induced_abelian(plane, c, Coefficients::Qmod1(), make_rat(1, 4));
    CHECK(same_values(coboundary(plane, quarters),
                      induced_abelian(plane, coboundary(plane, c), Coefficients::Qmod1(),
                                      make_rat(1, 4))));

    AbCochain mod2 = induced_abelian(plane, c, Coefficients::Zmod(2), Rat(1));
    CHECK(same_values(coboundary(plane, mod2),
                      induced_abelian(plane, coboundary(plane, c), Coefficients::Zmod(2),
                                      Rat(1))));
  }
}

TEST_CASE("group-valued pushforward along the sign character") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  std::vector<int> sign = {0, 1, 0, 1, 1, 0};
  REQUIRE(is_group_homomorphism(sign, s3, z2));

  Nerve sphere = tetra_boundary();
  GroupCochain c;
  c.degree = 2;
  c.values = {2, 1, 4, 0};
  GroupCochain image = induced_cocycle(sign, s3, z2, c);
  CHECK(image.values == std::vector<int>{0, 1, 1, 0});

  std::vector<int> not_hom = {0, 1, 1, 0, 0, 1};
  CHECK_THROWS_AS(induced_cocycle(not_hom, s3, z2, c), check_error);
}

TEST_CASE("twisted cocycle law reduces to closedness for trivial twists") {
  Nerve ball = Nerve::from_facets({{0, 1, 2, 3, 4}});
  FiniteGroup z5 = FiniteGroup::cyclic(5);
  AutomorphismCochain trivial = AutomorphismCochain::trivial(ball, z5);
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> pick(0, 4);

  for (int trial = 0; trial < 20; ++trial) {
    GroupCochain c = GroupCochain::constant(ball, 2, 0);
    for (auto& v : c.values) v = pick(rng);

    NonabelianReport report = nonabelian_2cocycle_check(ball, z5, trivial, c);
    CHECK(report.twist_failures.empty());

    AbCochain ab = to_ab(ball, c, 5);
    AbCochain dc = coboundary(ball, ab);
    std::vector<std::vector<int>> expected;
    for (const auto& tet : ball.simplices(3))
      if (dc.values[ball.index_of(tet)] != Rat(0)) expected.push_back(tet);
    CHECK(report.cocycle_failures == expected);
    CHECK(report.ok == expected.empty());
  }

  // exact cochains always pass
  for (int trial = 0; trial < 10; ++trial) {
    AbCochain u = AbCochain::zero(ball, 1, Coefficients::Zmod(5));
    for (auto& v : u.values) v = Rat(pick(rng));
    AbCochain du = coboundary(ball, u);
    GroupCochain c = GroupCochain::constant(ball, 2, 0);
    for (size_t i = 0; i < c.values.size(); ++i) c.values[i] = (int)num(du.values[i]);
    CHECK(nonabelian_2cocycle_check(ball, z5, trivial, c).ok);
  }
}

TEST_CASE("twist law failures are located") {
  Nerve disk = triangle_nerve();
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  AutomorphismCochain lambda = AutomorphismCochain::trivial(disk, z3);
  lambda.maps[disk.index_of({0, 1})] = {0, 2, 1};  // inversion
  GroupCochain c = GroupCochain::constant(disk, 2, 0);

  NonabelianReport report = nonabelian_2cocycle_check(disk, z3, lambda, c);
  CHECK_FALSE(report.ok);
  REQUIRE(report.twist_failures.size() == 1);
  CHECK(report.twist_failures[0] == std::vector<int>{0, 1, 2});
  CHECK(report.cocycle_failures.empty());

  // a non-automorphism edge map is rejected outright
  lambda.maps[disk.index_of({0, 1})] = {0, 1, 1};
  CHECK_THROWS_AS(nonabelian_2cocycle_check(disk, z3, lambda, c), check_error);
  lambda.maps[disk.index_of({0, 1})] = {0, 0, 0};
  CHECK_THROWS_AS(nonabelian_2cocycle_check(disk, z3, lambda, c), check_error);
}

TEST_CASE("cocycle law failures list the offending tetrahedra") {
  Nerve ball = solid_tetra();
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  GroupCochain c = GroupCochain::constant(ball, 2, 0);
  c.values[ball.index_of({0, 1, 2})] = 1;
  NonabelianReport report =
      nonabelian_2cocycle_check(ball, z2, AutomorphismCochain::trivial(ball, z2), c);
  CHECK_FALSE(report.ok);
  REQUIRE(report.cocycle_failures.size() == 1);
  CHECK(report.cocycle_failures[0] == std::vector<int>{0, 1, 2, 3});

  GroupCochain wrong_shape = c;
  wrong_shape.values.pop_back();
  CHECK_THROWS_AS(nonabelian_2cocycle_check(ball, z2, AutomorphismCochain::trivial(ball, z2),
                                            wrong_shape),
                  parse_error);
}

TEST_CASE("extension validation catches broken data") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z4 = FiniteGroup::cyclic(4);

  // the good one: 0 -> Z2 -> Z4 -> Z2 -> 0
  GroupExtension ext(z2, z4, z2, {0, 2}, {0, 1, 0, 1}, {0, 1});
  CHECK(ext.central());
  CHECK(ext.pull_back(2) == 1);
  CHECK_THROWS_AS(ext.pull_back(1), check_error);

  CHECK_THROWS_AS(GroupExtension(z2, z4, z2, {0, 0}, {0, 1, 0, 1}, {0, 1}), check_error);
  CHECK_THROWS_AS(GroupExtension(z2, z4, z2, {0, 2}, {0, 0, 0, 0}, {0, 1}), check_error);
  CHECK_THROWS_AS(GroupExtension(z2, z2, z2, {0, 1}, {0, 1}, {0, 1}), check_error);
  FiniteGroup one = FiniteGroup::trivial();
  CHECK_THROWS_AS(GroupExtension(one, z4, z2, {0}, {0, 1, 0, 1}, {0, 1}), check_error);
  CHECK_THROWS_AS(GroupExtension(z2, z4, z2, {0, 2}, {0, 1, 0, 1}, {0, 2}), check_error);
  CHECK_THROWS_AS(GroupExtension(z2, z4, z2, {0, 2}, {0, 1, 0, 1}, {0}), parse_error);
  CHECK_THROWS_AS(GroupExtension(z2, z4, z2, {0, 2}, {0, 1, 0, 1}, {0, 9}), parse_error);
}

TEST_CASE("splittable descent data has trivial obstruction") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup klein = FiniteGroup::product(z2, z2);
  GroupExtension ext(z2, klein, z2, {0, 2}, {0, 1, 0, 1}, {0, 1});
  CHECK(ext.central());

  Nerve sphere = tetra_boundary();
  // strict transition data from a vertex potential
  std::vector<int> psi = {0, 1, 1, 0};
  GroupCochain u = GroupCochain::constant(sphere, 1, 0);
  for (const auto& e : sphere.simplices(1))
    u.values[sphere.index_of(e)] = psi[e[0]] ^ psi[e[1]];

  LiftingObstruction lift = lifting_obstruction(ext, sphere, u, true);
  CHECK(lift.central);
  for (int v : lift.c.values) CHECK(v == 0);
  for (const auto& m : lift.lambda.maps) CHECK(m == std::vector<int>{0, 1});
}

TEST_CASE("non-strict transition data is refused") {
  Nerve disk = triangle_nerve();
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  GroupExtension ext(z2, z4, z2, {0, 2}, {0, 1, 0, 1}, {0, 1});
  GroupCochain u = GroupCochain::constant(disk, 1, 1);
  CHECK_THROWS_AS(lifting_obstruction(ext, disk, u), check_error);
  GroupCochain bad = GroupCochain::constant(disk, 1, 5);
  CHECK_THROWS_AS(lifting_obstruction(ext, disk, bad), parse_error);
  GroupCochain edge = GroupCochain::constant(disk, 2, 0);
  CHECK_THROWS_AS(lifting_obstruction(ext, disk, edge), parse_error);
}

TEST_CASE("symmetric group cover of the circle direction") {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  FiniteGroup s3 = FiniteGroup::symmetric3();
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  GroupExtension ext(z3, s3, z2, {0, 2, 5}, {0, 1, 0, 1, 1, 0}, {0, 1});
  CHECK_FALSE(ext.central());

  Nerve ball = solid_tetra();
  std::vector<int> psi = {0, 1, 0, 1};
  GroupCochain u = GroupCochain::constant(ball, 1, 0);
  for (const auto& e : ball.simplices(1))
    u.values[ball.index_of(e)] = psi[e[0]] ^ psi[e[1]];

  CHECK_THROWS_AS(lifting_obstruction(ext, ball, u, true), check_error);
  LiftingObstruction lift = lifting_obstruction(ext, ball, u);
  CHECK_FALSE(lift.central);

  // every odd permutation squares to the identity, so the cocycle part is
  // trivial; the band automorphisms invert exactly over the twisted edges
  for (int v : lift.c.values) CHECK(v == 0);
  for (const auto& e : ball.simplices(1)) {
    const auto& m = lift.lambda.maps[ball.index_of(e)];
    if (psi[e[0]] != psi[e[1]])
      CHECK(m == std::vector<int>{0, 2, 1});
    else
      CHECK(m == std::vector<int>{0, 1, 2});
  }
  CHECK(nonabelian_2cocycle_check(ball, z3, lift.lambda, lift.c).ok);
}

TEST_CASE("lift obstruction over the projective plane is the cup square") {
  Nerve plane = rp2_nerve();
  size_t n_edges = plane.count(1);
  REQUIRE(n_edges == 15);

  // enumerate closed mod-2 edge assignments and the exact ones among them
  std::vector<uint32_t> exact;
  for (uint32_t bmask = 0; bmask < 64; ++bmask) {
    uint32_t image = 0;
    for (size_t idx = 0; idx < n_edges; ++idx) {
      const auto& e = plane.simplices(1)[idx];
      // vertex ids run 1..6
      int bi = (bmask >> (e[0] - 1)) & 1, bj = (bmask >> (e[1] - 1)) & 1;
      if (bi ^ bj) image |= (1u << idx);
    }
    exact.push_back(image);
  }
  std::sort(exact.begin(), exact.end());
  exact.erase(std::unique(exact.begin(), exact.end()), exact.end());
  CHECK(exact.size() == 32);

  auto is_closed = [&](uint32_t mask) {
    for (const auto& tri : plane.simplices(2)) {
      int uij = (mask >> plane.index_of({tri[0], tri[1]})) & 1;
      int ujl = (mask >> plane.index_of({tri[1], tri[2]})) & 1;
      int uil = (mask >> plane.index_of({tri[0], tri[2]})) & 1;
      if (uij ^ ujl ^ uil) return false;
    }
    return true;
  };

  uint32_t generator = 0;
  size_t closed_count = 0;
  for (uint32_t mask = 0; mask < (1u << n_edges); ++mask) {
    if (!is_closed(mask)) continue;
    ++closed_count;
    if (generator == 0 && !std::binary_search(exact.begin(), exact.end(), mask)) generator = mask;
  }
  CHECK(closed_count == 64);
  REQUIRE(generator != 0);

  GroupCochain u = GroupCochain::constant(plane, 1, 0);
  for (size_t idx = 0; idx < n_edges; ++idx) u.values[idx] = (generator >> idx) & 1;

  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  GroupExtension ext(z2, z4, z2, {0, 2}, {0, 1, 0, 1}, {0, 1});
  LiftingObstruction lift = lifting_obstruction(ext, plane, u, true);

  // with the section 0,1 into Z4 the obstruction is the carry bit, i.e. the
  // cup square of the transition class
  for (const auto& tri : plane.simplices(2)) {
    int uij = u.values[plane.index_of({tri[0], tri[1]})];
    int ujl = u.values[plane.index_of({tri[1], tri[2]})];
    CHECK(lift.c.values[plane.index_of(tri)] == (uij & ujl));
  }

  // the class is the nonzero element of H^2(plane; Z/2): not a coboundary
  AbCochain cab = to_ab(plane, lift.c, 2);
  CHECK(is_zero(coboundary(plane, cab)));
  CHECK_FALSE(are_cohomologous(plane, AbCochain::zero(plane, 2, Coefficients::Zmod(2)), cab));

  // a different section only moves the obstruction by a coboundary
  LiftingObstruction other = lifting_obstruction(ext.with_section({2, 1}), plane, u, true);
  AbCochain oab = to_ab(plane, other.c, 2);
  CHECK_FALSE(same_values(cab, oab));
  CHECK(are_cohomologous(plane, cab, oab).has_value());

  // feeding it back through the twisted law: central band, trivial twists
  NonabelianReport report = nonabelian_2cocycle_check(plane, z2, lift.lambda, lift.c);
  CHECK(report.ok);
}
