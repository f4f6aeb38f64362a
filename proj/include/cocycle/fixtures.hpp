#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocycle/double_extension.hpp"
#include "cocycle/json_io.hpp"
#include "cocycle/linalg.hpp"

namespace cocycle::fixtures {

using io::Json;

struct Fixture {
  std::string name;
  std::string description;
  Json document;
  std::vector<std::string> command;  // default subcommand path for smoke runs
};

namespace detail {

inline Json tetra_facets() { return Json::array({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

inline Json rp2_facets() {
  return Json::array({{1, 2, 4},
                      {1, 2, 5},
                      {1, 3, 4},
                      {1, 3, 6},
                      {1, 5, 6},
                      {2, 3, 5},
                      {2, 3, 6},
                      {2, 4, 6},
                      {3, 4, 5},
                      {4, 5, 6}});
}

inline Json torus_facets() {
  Json facets = Json::array();
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return facets;
}

inline Json pentachoron_facets() {
  Json facets = Json::array();
  for (int skip = 4; skip >= 0; --skip) {
    Json f = Json::array();
    for (int v = 0; v <= 4; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return facets;
}

inline Json z2_doc() {
  return Json{{"table", {{0, 1}, {1, 0}}}, {"labels", {"1", "-1"}}};
}

inline Json cyclic_doc(int n) {
  Json table = Json::array(), labels = Json::array();
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back((a + b) % n);
    table.push_back(std::move(row));
  }
  return Json{{"table", table}, {"labels", labels}};
}

inline Json klein_doc() {
  Json table = Json::array();
  for (int a = 0; a < 4; ++a) {
    Json row = Json::array();
    for (int b = 0; b < 4; ++b) row.push_back(a ^ b);
    table.push_back(std::move(row));
  }
  return Json{{"table", table}, {"labels", {"e", "a", "b", "ab"}}};
}

inline Json identity_int(int n) {
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(i == j ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json scaled_identity_int(int n, int s) {
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(i == j ? s : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json complex_scalar_matrix(int m, double re, double im) {
  Json rows = Json::array();
  for (int i = 0; i < m; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m; ++j) row.push_back(Json::array({i == j ? re : 0.0, i == j ? im : 0.0}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json point_reflection_action(int n) {
  Json doc;
  doc["group"] = z2_doc();
  doc["n"] = n;
  doc["rho_Z"] = {{"1", identity_int(n)}, {"-1", scaled_identity_int(n, -1)}};
  doc["rho_C"] = {{"1", complex_scalar_matrix(n / 2, 1, 0)},
                  {"-1", complex_scalar_matrix(n / 2, -1, 0)}};
  return doc;
}

// First mod-2 edge assignment on the projective-plane nerve that is closed on
// every triangle but not the parity coboundary of any vertex assignment, in
// edge-bit enumeration order.  Deterministic generator of H^1 with Z/2 values.
inline std::vector<int> rp2_generator_bits() {
  Nerve n = io::nerve_from_json(rp2_facets());
  const auto& edges = n.simplices(1);
  const auto& tris = n.simplices(2);
  for (uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    bool closed = true;
    for (const auto& t : tris) {
      int parity = (int)((mask >> n.index_of({t[0], t[1]})) & 1) ^
                   (int)((mask >> n.index_of({t[0], t[2]})) & 1) ^
                   (int)((mask >> n.index_of({t[1], t[2]})) & 1);
      if (parity) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    bool exact = false;
    for (uint32_t vmask = 0; vmask < 64 && !exact; ++vmask) {
      bool match = true;
      for (size_t e = 0; e < edges.size(); ++e) {
        int want = (int)((vmask >> (edges[e][0] - 1)) & 1) ^ (int)((vmask >> (edges[e][1] - 1)) & 1);
        if (want != (int)((mask >> e) & 1)) {
          match = false;
          break;
        }
      }
      exact = match;
    }
    if (!exact) {
      std::vector<int> bits(edges.size());
      for (size_t e = 0; e < edges.size(); ++e) bits[e] = (int)((mask >> e) & 1);
      return bits;
    }
  }
  throw std::logic_error("projective plane lost its nontrivial parity class");
}

inline Json rp2_lift_doc() {
  Json doc;
  doc["facets"] = rp2_facets();
  doc["extension"] = Json{{"H", cyclic_doc(2)},
                          {"Lprime", cyclic_doc(4)},
                          {"L", cyclic_doc(2)},
                          {"inclusion", {0, 2}},
                          {"projection", {0, 1, 0, 1}},
                          {"section", {0, 1}}};
  Nerve n = io::nerve_from_json(rp2_facets());
  std::vector<int> bits = rp2_generator_bits();
  Json values = Json::object();
  const auto& edges = n.simplices(1);
  for (size_t e = 0; e < edges.size(); ++e)
    if (bits[e]) values[io::key_from_tuple(edges[e])] = "1";
  doc["u"] = Json{{"degree", 1}, {"values", values}};
  doc["require_central"] = true;
  return doc;
}

inline Json split_lift_doc() {
  Json doc;
  doc["facets"] = tetra_facets();
  doc["extension"] = Json{{"H", cyclic_doc(2)},
                          {"Lprime", klein_doc()},
                          {"L", cyclic_doc(2)},
                          {"inclusion", {0, 2}},
                          {"projection", {0, 1, 0, 1}},
                          {"section", {0, 1}}};
  // u = parity coboundary of the vertex pattern (0,1,1,0): exact, so liftable
  Json values = Json::object();
  int psi[4] = {0, 1, 1, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (psi[i] ^ psi[j]) values[std::to_string(i) + "," + std::to_string(j)] = "1";
  doc["u"] = Json{{"degree", 1}, {"values", values}};
  return doc;
}

inline Json atlas_s3_doc() {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  Json s3doc = io::group_to_json(s3);
  std::vector<int> id(s3.order());
  for (int a = 0; a < s3.order(); ++a) id[(size_t)a] = a;
  const int t = 1;  // the transposition swapping the first two points
  std::vector<int> ad = ad_map(s3, t);
  Json doc;
  doc["charts"] = Json::array({s3doc, s3doc, s3doc});
  doc["homs"] = Json::array({Json{{"x", 0}, {"y", 1}, {"map", ad}},
                             Json{{"x", 1}, {"y", 2}, {"map", id}},
                             Json{{"x", 0}, {"y", 2}, {"map", id}}});
  doc["twists"] = Json::array({Json{{"x", 0}, {"y", 1}, {"z", 2}, {"c", t}}});
  return doc;
}

inline Json defect_doc() {
  std::vector<RatMat> frames;
  frames.push_back(RatMat::identity(2));
  frames.push_back(RatMat{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  frames.push_back(RatMat{{Rat(1), Rat(0)}, {Rat(1), Rat(1)}});
  frames.push_back(RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
  RatMat base{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}};

  Json doc;
  doc["facets"] = tetra_facets();
  Json omega = Json::array();
  for (const RatMat& g : frames) omega.push_back(io::rat_mat_to_json(inverse(g) * base * g));
  doc["omega"] = omega;
  Json u = Json::array();
  Nerve n = io::nerve_from_json(tetra_facets());
  for (const auto& e : n.simplices(1))
    u.push_back(io::rat_mat_to_json(inverse(frames[(size_t)e[1]]) * frames[(size_t)e[0]]));
  doc["u"] = u;
  return doc;
}

inline Json hexagonal_doc() {
  Json doc;
  doc["group"] = cyclic_doc(3);
  doc["n"] = 2;
  doc["rho_Z"] = Json::object();
  doc["rho_Z"]["0"] = identity_int(2);
  doc["rho_Z"]["1"] = Json::array({{0, -1}, {1, -1}});
  doc["rho_Z"]["2"] = Json::array({{-1, 1}, {-1, 0}});
  const double third = 8.0 * std::atan(1.0) / 3.0;
  doc["rho_C"] = Json::object();
  doc["rho_C"]["0"] = complex_scalar_matrix(1, 1, 0);
  doc["rho_C"]["1"] = complex_scalar_matrix(1, std::cos(third), std::sin(third));
  doc["rho_C"]["2"] = complex_scalar_matrix(1, std::cos(2 * third), std::sin(2 * third));
  return doc;
}

inline std::vector<Fixture> build_corpus() {
  std::vector<Fixture> out;

  out.push_back({"heisenberg",
                 "3-dimensional Heisenberg algebra: [x,y] = z",
                 Json{{"dim", 3},
                      {"basis", {"x", "y", "z"}},
                      {"brackets", Json::array({Json{{"i", 0}, {"j", 1}, {"coeffs", {{"2", "1"}}}}})}},
                 {"lie", "betti"}});

  out.push_back({"abelian4",
                 "abelian Lie algebra of dimension 4 (all brackets zero)",
                 Json{{"dim", 4}},
                 {"lie", "validate"}});

  {
    auto [osc, metric] = double_extension(
        BilinearForm{2, RatMat::identity(2)}, RatMat{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}});
    out.push_back({"oscillator",
                   "oscillator algebra with its invariant metric, the double extension of the "
                   "Euclidean plane by a rotation",
                   Json{{"algebra", io::algebra_to_json(osc)}, {"form", io::form_to_json(metric)}},
                   {"lie", "nu"}});
  }

  out.push_back({"oscillator-input",
                 "double-extension input: Euclidean plane gram matrix plus the rotation derivation",
                 Json{{"gram", {{1, 0}, {0, 1}}}, {"h", {{0, -1}, {1, 0}}}},
                 {"lie", "doubleext"}});

  out.push_back({"tetrahedron",
                 "boundary of the 3-simplex, a triangulated 2-sphere (4 triangles)",
                 Json{{"facets", tetra_facets()}, {"degree", 2}, {"coefficients", "Z"}},
                 {"cech", "h"}});

  out.push_back({"rp2",
                 "minimal 6-vertex triangulation of the real projective plane (10 triangles)",
                 Json{{"facets", rp2_facets()}, {"degree", 2}, {"coefficients", "Z"}},
                 {"cech", "h"}});

  out.push_back({"torus7",
                 "7-vertex torus triangulation with complete edge graph (14 triangles)",
                 Json{{"facets", torus_facets()}, {"degree", 1}, {"coefficients", "Z"}},
                 {"cech", "h"}});

  out.push_back({"s3",
                 "symmetric group on three letters, given by permutation generators",
                 Json{{"perm_generators", {{1, 0, 2}, {1, 2, 0}}}},
                 {"orbifold", "classes"}});

  out.push_back({"kummer",
                 "order-2 point reflection of the 4-torus with its complex structure (Kummer "
                 "surface quotient)",
                 point_reflection_action(4),
                 {"orbifold", "cr"}});

  out.push_back({"t2-involution",
                 "order-2 point reflection of the 2-torus (pillowcase quotient)",
                 point_reflection_action(2),
                 {"orbifold", "cr"}});

  {
    Json doc;
    doc["group"] = Json{{"table", {{0}}}, {"labels", {"e"}}};
    doc["n"] = 2;
    doc["rho_Z"] = {{"e", identity_int(2)}};
    doc["rho_C"] = {{"e", complex_scalar_matrix(1, 1, 0)}};
    out.push_back({"t2-trivial",
                   "trivial group acting on the 2-torus; quotient is the torus itself",
                   doc,
                   {"orbifold", "cr"}});
  }

  out.push_back({"hexagonal",
                 "order-3 rotation of the hexagonal 2-torus",
                 hexagonal_doc(),
                 {"orbifold", "cr"}});

  out.push_back({"rp2-lift",
                 "order-4 cyclic extension of the parity group over the projective-plane nerve, "
                 "with a transition cocycle that does not lift",
                 rp2_lift_doc(),
                 {"cech", "obstruct"}});

  out.push_back({"split-lift",
                 "split Klein-four extension over the 2-sphere nerve with an exact transition "
                 "cocycle; every lift exists",
                 split_lift_doc(),
                 {"cech", "obstruct"}});

  out.push_back({"gerbe-quarter",
                 "gerbe data on the 2-sphere nerve with a single quarter-turn comparison value",
                 Json{{"facets", tetra_facets()},
                      {"a",
                       Json{{"degree", 1},
                            {"coefficients", "Q/Z"},
                            {"values", {{"0,1", "1/4"}}}}}},
                 {"gerbe", "holonomy"}});

  out.push_back({"gerbe-half",
                 "oriented 2-sphere whose classifying cocycle carries a half twist; holonomy 1/2",
                 Json{{"facets", tetra_facets()},
                      {"orientation", "auto"},
                      {"c",
                       Json{{"degree", 2},
                            {"coefficients", "Q/Z"},
                            {"values", {{"0,1,2", "1/2"}}}}}},
                 {"gerbe", "surface"}});

  out.push_back({"atlas-s3",
                 "three charts with symmetric-group bands; transition maps compose up to an inner "
                 "twist by a transposition",
                 atlas_s3_doc(),
                 {"orbifold", "atlas"}});

  out.push_back({"defect-sl2",
                 "matrix curving data on the 2-sphere nerve, conjugate under the frames defining "
                 "the transitions (flat)",
                 defect_doc(),
                 {"gerbe", "defect"}});

  out.push_back({"seq-sphere",
                 "integer 2-cochain on the boundary of the 4-simplex; coboundary input for the "
                 "degree-3 sequence class",
                 Json{{"facets", pentachoron_facets()},
                      {"cstar",
                       Json{{"degree", 2},
                            {"coefficients", "Z"},
                            {"values", {{"0,1,2", "1"}, {"1,2,3", "2"}, {"0,3,4", "-1"}}}}}},
                 {"gerbe", "seq4"}});

  return out;
}

}  // namespace detail

inline const std::vector<Fixture>& corpus() {
  static const std::vector<Fixture> fixtures = detail::build_corpus();
  return fixtures;
}

inline const Fixture* find(const std::string& name) {
  for (const Fixture& f : corpus())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace cocycle::fixtures
