#include <catch2/catch_amalgamated.hpp>

#include "cocycle/fixtures.hpp"
#include "cocycle/json_io.hpp"
#include "helpers.hpp"

using namespace cocycle;
using io::Json;
using namespace testhelpers;

TEST_CASE("rationals serialize as strings and parse from both forms") {
  CHECK(io::rat_from_json(Json(7)) == Rat(7));
  CHECK(io::rat_from_json(Json(-3)) == Rat(-3));
  CHECK(io::rat_from_json(Json("3/4")) == make_rat(3, 4));
  CHECK(io::rat_from_json(Json("-7/2")) == make_rat(-7, 2));
  CHECK_THROWS_AS(io::rat_from_json(Json("three")), parse_error);
  CHECK_THROWS_AS(io::rat_from_json(Json(true)), parse_error);
  CHECK_THROWS_AS(io::rat_from_json(Json(1.5)), parse_error);

  CHECK(io::rat_to_json(make_rat(3, 4)) == Json("3/4"));
  CHECK(io::rat_to_json(Rat(-2)) == Json("-2"));
  // round trip through the string form
  for (long p = -5; p <= 5; ++p)
    for (long q = 1; q <= 4; ++q)
      CHECK(io::rat_from_json(io::rat_to_json(make_rat(p, q))) == make_rat(p, q));
}

TEST_CASE("matrix documents round-trip and reject ragged input") {
  RatMat m{{make_rat(1, 2), Rat(0)}, {Rat(-3), Rat(5)}};
  RatMat back = io::rat_mat_from_json(io::rat_mat_to_json(m));
  CHECK(back == m);

  CHECK_THROWS_AS(io::rat_mat_from_json(Json::array()), parse_error);
  CHECK_THROWS_AS(io::rat_mat_from_json(Json::parse("[[1,2],[3]]")), parse_error);
  CHECK_THROWS_AS(io::rat_mat_from_json(Json::parse("[[],[]]")), parse_error);
  CHECK_THROWS_AS(io::rat_mat_from_json(Json::parse("[1,2]")), parse_error);

  IntMat z = io::int_mat_from_json(Json::parse("[[1,-2],[0,7]]"));
  CHECK(z(0, 1) == Int(-2));
  CHECK(io::int_mat_from_json(io::int_mat_to_json(z)) == z);
  CHECK_THROWS_AS(io::int_mat_from_json(Json::parse("[[\"1/2\"]]")), parse_error);
}

TEST_CASE("algebra documents round-trip brackets and basis names") {
  LieAlgebra h = heisenberg();
  LieAlgebra back = io::algebra_from_json(io::algebra_to_json(h));
  REQUIRE(back.dim() == h.dim());
  CHECK(back.basis() == h.basis());
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) CHECK(back.bracket(i, j) == h.bracket(i, j));

  // defaults: no basis names, no brackets
  LieAlgebra plain = io::algebra_from_json(Json{{"dim", 2}});
  CHECK(plain.basis() == std::vector<std::string>{"e0", "e1"});
  CHECK(validate(plain).jacobi_ok);

  CHECK_THROWS_AS(io::algebra_from_json(Json::object()), parse_error);
  CHECK_THROWS_AS(io::algebra_from_json(Json{{"dim", 0}}), parse_error);
  CHECK_THROWS_AS(io::algebra_from_json(Json{{"dim", 2}, {"basis", {"x"}}}), parse_error);
  CHECK_THROWS_AS(
      io::algebra_from_json(Json{
          {"dim", 2},
          {"brackets", Json::array({Json{{"i", 0}, {"j", 5}, {"coeffs", Json::object()}}})}}),
      parse_error);
  CHECK_THROWS_AS(
      io::algebra_from_json(Json{
          {"dim", 2},
          {"brackets", Json::array({Json{{"i", 0}, {"j", 1}, {"coeffs", {{"x", "1"}}}}})}}),
      parse_error);
}

TEST_CASE("bilinear and invariant forms round-trip") {
  auto [osc, metric] = oscillator();
  BilinearForm back = io::form_from_json(io::form_to_json(metric));
  CHECK(back.dim == metric.dim);
  CHECK(back.gram == metric.gram);
  // a bare matrix is also accepted
  CHECK(io::form_from_json(Json::parse("[[1,0],[0,1]]")).dim == 2);
  CHECK_THROWS_AS(io::form_from_json(Json::parse("[[1,0]]")), parse_error);

  InvariantForm nu = nu_form(osc, metric).nu;
  InvariantForm nu_back = io::invariant_form_from_json(io::invariant_form_to_json(nu));
  CHECK(nu_back == nu);

  CHECK_THROWS_AS(io::invariant_form_from_json(Json{{"degree", 2}, {"algebra_dim", 3}}),
                  parse_error);
  // key arity and range are validated
  CHECK_THROWS_AS(io::invariant_form_from_json(Json{{"degree", 2},
                                                    {"algebra_dim", 3},
                                                    {"components", {{"0", "1"}}}}),
                  parse_error);
  CHECK_THROWS_AS(io::invariant_form_from_json(Json{{"degree", 2},
                                                    {"algebra_dim", 3},
                                                    {"components", {{"1,0", "1"}}}}),
                  parse_error);
  CHECK_THROWS_AS(io::invariant_form_from_json(Json{{"degree", 2},
                                                    {"algebra_dim", 3},
                                                    {"components", {{"0,7", "1"}}}}),
                  parse_error);
}

TEST_CASE("group documents round-trip tables and accept permutation generators") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  FiniteGroup back = io::group_from_json(io::group_to_json(s3));
  REQUIRE(back.order() == s3.order());
  CHECK(back.labels() == s3.labels());
  for (int a = 0; a < s3.order(); ++a)
    for (int b = 0; b < s3.order(); ++b) CHECK(back.mul(a, b) == s3.mul(a, b));

  FiniteGroup gen = io::group_from_json(Json{{"perm_generators", {{1, 0, 2}, {1, 2, 0}}}});
  CHECK(gen.order() == 6);

  CHECK_THROWS_AS(io::group_from_json(Json::object()), parse_error);
  CHECK_THROWS_AS(io::group_from_json(Json{{"perm_generators", Json::array()}}), parse_error);

  CHECK(io::element_from_json(s3, Json(4)) == 4);
  CHECK(io::element_from_json(s3, Json("1.0.2")) == 1);
  CHECK_THROWS_AS(io::element_from_json(s3, Json(6)), parse_error);
  CHECK_THROWS_AS(io::element_from_json(s3, Json("nope")), parse_error);
  CHECK_THROWS_AS(io::element_from_json(s3, Json(1.5)), parse_error);
}

TEST_CASE("action documents require one matrix per element, keyed by label") {
  const fixtures::Fixture* kummer = fixtures::find("kummer");
  REQUIRE(kummer != nullptr);
  ToralAction act = io::action_from_json(kummer->document);
  CHECK(act.torus_dim() == 4);
  CHECK(act.has_complex());
  CHECK(act.group().order() == 2);

  Json broken = kummer->document;
  broken["rho_Z"].erase("-1");
  CHECK_THROWS_AS(io::action_from_json(broken), parse_error);

  Json badc = kummer->document;
  badc["rho_C"]["-1"][0][0] = Json::array({1});  // not an [re, im] pair
  CHECK_THROWS_AS(io::action_from_json(badc), parse_error);

  // rho_C is optional
  Json bare = kummer->document;
  bare.erase("rho_C");
  CHECK_FALSE(io::action_from_json(bare).has_complex());
}

TEST_CASE("nerve documents round-trip through their maximal simplices") {
  for (const Nerve& n : {rp2_nerve(), torus_nerve(), tetra_boundary(), solid_tetra()}) {
    Nerve back = io::nerve_from_json(io::nerve_to_json(n));
    REQUIRE(back.top_degree() == n.top_degree());
    for (int k = 0; k <= n.top_degree(); ++k) CHECK(back.simplices(k) == n.simplices(k));
  }
  // mixed-dimension facets survive
  Nerve mixed = Nerve::from_facets({{0, 1, 2}, {3, 4}});
  Nerve mixed_back = io::nerve_from_json(io::nerve_to_json(mixed));
  CHECK(mixed_back.count(1) == mixed.count(1));
  CHECK(mixed_back.count(2) == 1);

  CHECK_THROWS_AS(io::nerve_from_json(Json{{"facets", "no"}}), parse_error);
  CHECK_THROWS_AS(io::nerve_from_json(Json{{"facets", Json::array()}}), parse_error);
}

TEST_CASE("coefficient strings parse and reject junk") {
  CHECK(io::coeffs_from_string("Z").describe() == "Z");
  CHECK(io::coeffs_from_string("Q").describe() == "Q");
  CHECK(io::coeffs_from_string("Z/7").describe() == "Z/7");
  CHECK(io::coeffs_from_string("Q/Z").describe() == "Q/Z");
  CHECK_THROWS_AS(io::coeffs_from_string("Z/x"), parse_error);
  CHECK_THROWS_AS(io::coeffs_from_string("Z/1"), parse_error);
  CHECK_THROWS_AS(io::coeffs_from_string("F5"), parse_error);
  CHECK_THROWS_AS(io::coeffs_from_string(""), parse_error);
}

TEST_CASE("abelian cochain documents round-trip and normalize on read") {
  Nerve t = torus_nerve();
  AbCochain c = AbCochain::zero(t, 1, Coefficients::Z());
  c.values[t.index_of({0, 1})] = Rat(3);
  c.values[t.index_of({2, 5})] = Rat(-2);
  AbCochain back = io::cochain_from_json(t, io::cochain_to_json(t, c));
  CHECK(back.degree == c.degree);
  CHECK(back.values == c.values);

  // values outside the fundamental domain are normalized while reading
  Json doc{{"degree", 1}, {"coefficients", "Q/Z"}, {"values", {{"0,1", "5/4"}}}};
  AbCochain q = io::cochain_from_json(t, doc);
  CHECK(q.values[t.index_of({0, 1})] == make_rat(1, 4));

  // missing value entries default to zero
  AbCochain zero = io::cochain_from_json(t, Json{{"degree", 2}, {"coefficients", "Z"}});
  CHECK(zero.values == std::vector<Rat>(t.count(2), Rat(0)));

  CHECK_THROWS_AS(
      io::cochain_from_json(t, Json{{"degree", 1}, {"coefficients", "Z"}, {"values", {{"0,9", "1"}}}}),
      parse_error);
  CHECK_THROWS_AS(
      io::cochain_from_json(t, Json{{"degree", 1}, {"coefficients", "Z"}, {"values", {{"0,1,2", "1"}}}}),
      parse_error);
  CHECK_THROWS_AS(io::cochain_from_json(t, Json{{"degree", -1}, {"coefficients", "Z"}}),
                  parse_error);
  CHECK_THROWS_AS(io::cochain_from_json(t, Json{{"degree", 1}}), parse_error);
}

TEST_CASE("simplex keys are comma-joined tuples") {
  CHECK(io::key_from_tuple({0, 3, 11}) == "0,3,11");
  CHECK(io::tuple_from_key("0,3,11") == std::vector<int>{0, 3, 11});
  CHECK(io::tuple_from_key("7") == std::vector<int>{7});
  CHECK_THROWS_AS(io::tuple_from_key(""), parse_error);
  CHECK_THROWS_AS(io::tuple_from_key("1,,2"), parse_error);
  CHECK_THROWS_AS(io::tuple_from_key("1,a"), parse_error);
  CHECK_THROWS_AS(io::tuple_from_key("1 2"), parse_error);
}

TEST_CASE("group cochains accept element labels or indices") {
  Nerve t = triangle_nerve();
  FiniteGroup s3 = FiniteGroup::symmetric3();
  Json doc{{"degree", 1}, {"values", {{"0,1", "1.0.2"}, {"1,2", 2}}}};
  GroupCochain c = io::group_cochain_from_json(t, s3, doc);
  CHECK(c.values[t.index_of({0, 1})] == 1);
  CHECK(c.values[t.index_of({1, 2})] == 2);
  CHECK(c.values[t.index_of({0, 2})] == s3.id());

  GroupCochain back = io::group_cochain_from_json(t, s3, io::group_cochain_to_json(t, s3, c));
  CHECK(back.values == c.values);

  CHECK_THROWS_AS(
      io::group_cochain_from_json(t, s3, Json{{"degree", 1}, {"values", {{"0,1", "zzz"}}}}),
      parse_error);
  CHECK_THROWS_AS(
      io::group_cochain_from_json(t, s3, Json{{"degree", 1}, {"values", {{"0,1,2", 0}}}}),
      parse_error);
}

TEST_CASE("extension documents build validated extensions") {
  const fixtures::Fixture* lift = fixtures::find("rp2-lift");
  REQUIRE(lift != nullptr);
  GroupExtension ext = io::extension_from_json(lift->document.at("extension"));
  CHECK(ext.central());
  CHECK(ext.band().order() == 2);
  CHECK(ext.total().order() == 4);

  Json bad = lift->document.at("extension");
  bad["section"] = Json::array({0});
  CHECK_THROWS_AS(io::extension_from_json(bad), parse_error);

  Json nonsplit = lift->document.at("extension");
  nonsplit["projection"] = Json::array({0, 0, 0, 0});
  CHECK_THROWS_AS(io::extension_from_json(nonsplit), check_error);
}

TEST_CASE("gerbe documents default missing layers to zero") {
  Nerve s = tetra_boundary();
  const fixtures::Fixture* half = fixtures::find("gerbe-half");
  REQUIRE(half != nullptr);
  GerbeConnection g = io::gerbe_from_json(s, half->document);
  CHECK_NOTHROW(g.validate(s));
  CHECK(g.c.values[s.index_of({0, 1, 2})] == make_rat(1, 2));
  CHECK(g.a.values == std::vector<Rat>(s.count(1), Rat(0)));
  CHECK(g.h.values == std::vector<Rat>(s.count(0), Rat(0)));
}

TEST_CASE("atlas documents rebuild checked atlases") {
  const fixtures::Fixture* doc = fixtures::find("atlas-s3");
  REQUIRE(doc != nullptr);
  ChartAtlas atlas = io::atlas_from_json(doc->document);
  CHECK(atlas.chart_count() == 3);
  CHECK(atlas_check(atlas).ok);

  Json broken = doc->document;
  broken["homs"][0]["map"] = Json::array({0, 0, 0, 0, 0, 2});  // not a homomorphism
  CHECK_THROWS_AS(io::atlas_from_json(broken), check_error);

  Json badchart = doc->document;
  badchart["twists"][0]["x"] = 9;
  CHECK_THROWS_AS(io::atlas_from_json(badchart), parse_error);
}

TEST_CASE("matrix lists enforce the expected length") {
  Json doc = Json::array({Json::parse("[[1,0],[0,1]]"), Json::parse("[[2,0],[0,2]]")});
  std::vector<RatMat> ms = io::mat_list_from_json(doc, "test", 2);
  CHECK(ms.size() == 2);
  CHECK_THROWS_AS(io::mat_list_from_json(doc, "test", 3), parse_error);
  CHECK_THROWS_AS(io::mat_list_from_json(Json("x"), "test", 1), parse_error);
}

TEST_CASE("every bundled fixture parses into its domain type") {
  REQUIRE(fixtures::corpus().size() >= 6);
  for (const fixtures::Fixture& f : fixtures::corpus()) {
    CAPTURE(f.name);
    CHECK_FALSE(f.description.empty());
    CHECK_FALSE(f.command.empty());
    const Json& d = f.document;
    if (d.contains("facets")) CHECK_NOTHROW(io::nerve_from_json(d));
    if (d.contains("dim")) CHECK_NOTHROW(io::algebra_from_json(d));
    if (d.contains("algebra")) CHECK_NOTHROW(io::algebra_from_json(d.at("algebra")));
    if (d.contains("form")) CHECK_NOTHROW(io::form_from_json(d.at("form")));
    if (d.contains("gram")) CHECK_NOTHROW(io::form_from_json(d.at("gram")));
    if (d.contains("h")) CHECK_NOTHROW(io::rat_mat_from_json(d.at("h")));
    if (d.contains("group") && d.contains("rho_Z")) CHECK_NOTHROW(io::action_from_json(d));
    if (d.contains("perm_generators") || (d.contains("table") && !d.contains("facets")))
      CHECK_NOTHROW(io::group_from_json(d));
    if (d.contains("extension")) {
      Nerve n = io::nerve_from_json(d);
      GroupExtension ext = io::extension_from_json(d.at("extension"));
      CHECK_NOTHROW(io::group_cochain_from_json(n, ext.base(), d.at("u")));
    }
    if (d.contains("charts")) CHECK_NOTHROW(io::atlas_from_json(d));
    if (d.contains("omega")) {
      Nerve n = io::nerve_from_json(d);
      CHECK_NOTHROW(io::mat_list_from_json(d.at("omega"), "omega", n.count(0)));
      CHECK_NOTHROW(io::mat_list_from_json(d.at("u"), "u", n.count(1)));
    }
    if (d.contains("cstar")) {
      Nerve n = io::nerve_from_json(d);
      CHECK_NOTHROW(io::cochain_from_json(n, d.at("cstar")));
    }
    if (d.contains("c") && d.at("c").is_object() && d.at("c").contains("coefficients")) {
      Nerve n = io::nerve_from_json(d);
      CHECK_NOTHROW(io::cochain_from_json(n, d.at("c")));
    }
  }
}
