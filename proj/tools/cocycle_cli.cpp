// Command-line front end: loads a JSON document (file or bundled fixture),
// runs one exact computation, and reports in text or JSON.
// Exit codes: 0 success, 1 a mathematical check failed, 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cocycle/curvature.hpp"
#include "cocycle/fixtures.hpp"
#include "cocycle/json_io.hpp"
#include "cocycle/surface.hpp"

namespace {

using namespace cocycle;
using io::Json;

struct Options {
  std::string input;
  std::string format = "text";
  double tolerance = 1e-6;
  int max_group_order = 24;
};

struct RunReport {
  std::string status = "ok";  // ok | check-failed | invalid-input
  Json payload = Json::object();
  std::vector<std::string> diagnostics;
  std::vector<std::string> text;
};

// ----- small renderers -------------------------------------------------------

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::string named_tuple_text(const std::vector<int>& t, const std::vector<std::string>& names) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += names[(size_t)t[i]];
  }
  return s + ")";
}

std::string row_text(const RatMat& m, size_t i) {
  std::string s;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (c) s += " ";
    s += format_rat(m(i, c));
  }
  return s;
}

std::string mat_text(const RatMat& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    s += row_text(m, i);
  }
  return s + "]";
}

std::string value_text(const std::vector<Rat>& v) {
  if (v.size() == 1) return format_rat(v[0]);
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_rat(v[i]);
  }
  return s + ")";
}

std::string lin_comb_text(const std::vector<Rat>& coeffs, const std::vector<std::string>& names) {
  std::string s;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == Rat(0)) continue;
    std::string term;
    if (coeffs[k] == Rat(-1))
      term = "-" + names[k];
    else if (coeffs[k] == Rat(1))
      term = names[k];
    else
      term = format_rat(coeffs[k]) + "*" + names[k];
    if (!s.empty()) s += " + ";
    s += term;
  }
  return s.empty() ? "0" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void form_text_lines(RunReport& r, const std::string& name, const InvariantForm& f,
                     const std::vector<std::string>& names) {
  CombIndex ix(f.algebra_dim, f.degree);
  bool any = false;
  for (size_t p = 0; p < f.comps.size(); ++p) {
    bool zero = true;
    for (const Rat& v : f.comps[p])
      if (!(v == Rat(0))) zero = false;
    if (zero) continue;
    any = true;
    r.text.push_back(name + (names.empty() ? tuple_text(ix.tuple(p))
                                           : named_tuple_text(ix.tuple(p), names)) +
                     " = " + value_text(f.comps[p]));
  }
  if (!any) r.text.push_back(name + " = 0");
}

void algebra_text_lines(RunReport& r, const LieAlgebra& L) {
  r.text.push_back("dim: " + std::to_string(L.dim()));
  std::string basis;
  for (int i = 0; i < L.dim(); ++i) {
    if (i) basis += ", ";
    basis += L.basis()[(size_t)i];
  }
  r.text.push_back("basis: " + basis);
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      bool zero = true;
      for (const Rat& c : L.bracket(i, j))
        if (!(c == Rat(0))) zero = false;
      if (zero) continue;
      r.text.push_back("[" + L.basis()[(size_t)i] + ", " + L.basis()[(size_t)j] +
                       "] = " + lin_comb_text(L.bracket(i, j), L.basis()));
    }
}

Json validation_payload(const LieAlgebra& L, const LieValidation& v) {
  Json out;
  out["dim"] = L.dim();
  out["jacobi_ok"] = v.jacobi_ok;
  out["integral"] = v.integral;
  out["nilpotent"] = v.nilpotent;
  if (v.nilpotent) out["nilpotency_class"] = v.nilpotency_class;
  Json viols = Json::array();
  for (const JacobiViolation& violation : v.violations) {
    Json defect = Json::array();
    for (const Rat& d : violation.defect) defect.push_back(io::rat_to_json(d));
    viols.push_back(Json{{"i", violation.i}, {"j", violation.j}, {"k", violation.k},
                         {"defect", defect}});
  }
  out["violations"] = viols;
  return out;
}

void jacobi_diagnostics(RunReport& r, const LieAlgebra& L, const LieValidation& v) {
  for (const JacobiViolation& violation : v.violations)
    r.diagnostics.push_back(
        "Jacobi identity fails on " +
        named_tuple_text({violation.i, violation.j, violation.k}, L.basis()) + ": defect " +
        value_text(violation.defect));
}

// ----- lie handlers ----------------------------------------------------------

void lie_validate(const Json& doc, const Options&, RunReport& r) {
  LieAlgebra L = io::algebra_from_json(doc);
  LieValidation v = validate(L);
  r.payload = validation_payload(L, v);
  algebra_text_lines(r, L);
  r.text.push_back("jacobi: " + std::string(v.jacobi_ok ? "ok" : "violated"));
  r.text.push_back("integral structure constants: " + yes_no(v.integral));
  r.text.push_back(v.nilpotent
                       ? "nilpotent: yes (class " + std::to_string(v.nilpotency_class) + ")"
                       : "nilpotent: no");
  if (!v.jacobi_ok) {
    r.status = "check-failed";
    jacobi_diagnostics(r, L, v);
  }
}

void lie_betti(const Json& doc, const Options&, RunReport& r) {
  LieAlgebra L = io::algebra_from_json(doc);
  LieValidation v = validate(L);
  if (!v.jacobi_ok) {
    r.status = "check-failed";
    jacobi_diagnostics(r, L, v);
    return;
  }
  std::vector<size_t> b = betti_sequence(L);
  Json arr = Json::array();
  std::string line;
  for (size_t i = 0; i < b.size(); ++i) {
    arr.push_back(b[i]);
    if (i) line += ",";
    line += std::to_string(b[i]);
  }
  r.payload["betti"] = arr;
  r.text.push_back("betti: " + line);
}

void lie_invforms(const Json& doc, const Options&, RunReport& r) {
  LieAlgebra L = io::algebra_from_json(doc);
  LieValidation v = validate(L);
  if (!v.jacobi_ok) {
    r.status = "check-failed";
    jacobi_diagnostics(r, L, v);
    return;
  }
  std::vector<AnnotatedForm> basis = invariant_symmetric_forms(L);
  r.payload["space_dim"] = basis.size();
  Json forms = Json::array();
  for (const AnnotatedForm& f : basis)
    forms.push_back(Json{{"gram", io::rat_mat_to_json(f.form.gram)},
                         {"rank", f.rank},
                         {"degenerate", f.degenerate}});
  r.payload["forms"] = forms;
  r.text.push_back("invariant symmetric forms: dimension " + std::to_string(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    r.text.push_back("form " + std::to_string(i) + ": rank " + std::to_string(basis[i].rank) +
                     (basis[i].degenerate ? " (degenerate), gram " : " (non-degenerate), gram ") +
                     mat_text(basis[i].form.gram));
  if (!basis.empty()) {
    AnnotatedForm best = max_rank_witness(basis);
    r.payload["best"] = Json{{"gram", io::rat_mat_to_json(best.form.gram)},
                             {"rank", best.rank},
                             {"degenerate", best.degenerate}};
    r.text.push_back("best combination: rank " + std::to_string(best.rank) +
                     (best.degenerate ? " (degenerate)" : " (non-degenerate)"));
  }
}

void lie_nu(const Json& doc, const Options&, RunReport& r) {
  LieAlgebra L = io::algebra_from_json(io::get(doc, "algebra"));
  BilinearForm b = io::form_from_json(io::get(doc, "form"));
  NuFormResult res = nu_form(L, b);
  bool nonzero = !(res.nu == InvariantForm::zero(3, L.dim(), 1));
  r.payload["nu"] = io::invariant_form_to_json(res.nu);
  r.payload["antisymmetric"] = res.antisymmetric;
  r.payload["closed"] = res.closed;
  r.payload["nonzero"] = nonzero;
  form_text_lines(r, "nu", res.nu, L.basis());
  r.text.push_back("antisymmetric: " + yes_no(res.antisymmetric));
  r.text.push_back("closed: " + yes_no(res.closed));
  r.text.push_back("nonzero: " + yes_no(nonzero));
  if (!res.antisymmetric || !res.closed) {
    r.status = "check-failed";
    for (const auto& t : res.antisym_failures)
      r.diagnostics.push_back("antisymmetry fails on " +
                              named_tuple_text({t[0], t[1], t[2]}, L.basis()));
    if (!res.closed) r.diagnostics.push_back("nu is not closed in the cochain complex");
  }
}

void lie_doubleext(const Json& doc, const Options&, RunReport& r) {
  BilinearForm u_form = io::form_from_json(io::get(doc, "gram"));
  RatMat h = io::rat_mat_from_json(io::get(doc, "h"));
  auto [L, B] = double_extension(u_form, h);
  r.payload["algebra"] = io::algebra_to_json(L);
  r.payload["form"] = io::form_to_json(B);
  algebra_text_lines(r, L);
  r.text.push_back("gram:");
  for (size_t i = 0; i < B.gram.rows(); ++i) r.text.push_back("  " + row_text(B.gram, i));
}

void lie_curvature(const Json& doc, const Options&, RunReport& r) {
  LieAlgebra base = io::algebra_from_json(io::get(doc, "base"));
  LieAlgebra values = io::algebra_from_json(io::get(doc, "values"));
  InvariantForm theta = io::invariant_form_from_json(io::get(doc, "theta"));
  InvariantForm omega = curvature(base, values, theta);
  bool flat = omega == InvariantForm::zero(omega.degree, omega.algebra_dim, omega.value_dim);
  r.payload["curvature"] = io::invariant_form_to_json(omega);
  r.payload["flat"] = flat;
  form_text_lines(r, "Omega", omega, base.basis());
  r.text.push_back("flat: " + yes_no(flat));
}

// ----- orbifold handlers -----------------------------------------------------

void orbifold_classes(const Json& doc, const Options& o, RunReport& r) {
  FiniteGroup g = io::group_from_json(doc);
  r.payload["order"] = g.order();
  Json classes = Json::array();
  r.text.push_back("order: " + std::to_string(g.order()));
  for (const auto& cls : conjugacy_classes(g)) {
    Json members = Json::array();
    std::string names;
    for (int a : cls) {
      members.push_back(g.label(a));
      if (!names.empty()) names += ", ";
      names += g.label(a);
    }
    int cent = (int)centralizer(g, cls.front()).size();
    classes.push_back(Json{{"representative", g.label(cls.front())},
                           {"size", cls.size()},
                           {"members", members},
                           {"centralizer_order", cent}});
    r.text.push_back("class of " + g.label(cls.front()) + ": size " +
                     std::to_string(cls.size()) + ", centralizer order " + std::to_string(cent) +
                     ", members {" + names + "}");
  }
  r.payload["conjugacy_classes"] = classes;
  Json subs = Json::array();
  for (const auto& cls : subgroup_classes(g, o.max_group_order)) {
    Json rep = Json::array();
    std::string names;
    for (int a : cls.front()) {
      rep.push_back(g.label(a));
      if (!names.empty()) names += ", ";
      names += g.label(a);
    }
    subs.push_back(Json{{"order", cls.front().size()},
                        {"conjugates", cls.size()},
                        {"representative", rep}});
    r.text.push_back("subgroup class: order " + std::to_string(cls.front().size()) + ", " +
                     std::to_string(cls.size()) + " conjugate(s), representative {" + names + "}");
  }
  r.payload["subgroup_classes"] = subs;
}

void orbifold_atlas(const Json& doc, const Options&, RunReport& r) {
  ChartAtlas atlas = io::atlas_from_json(doc);
  AtlasReport rep = atlas_check(atlas);
  r.payload["ok"] = rep.ok;
  r.payload["charts"] = atlas.chart_count();
  Json viols = Json::array();
  for (const AtlasViolation& v : rep.violations) {
    viols.push_back(Json{{"x", v.x}, {"y", v.y}, {"z", v.z},
                         {"gamma", atlas.chart(v.z).label(v.gamma)},
                         {"composed", atlas.chart(v.x).label(v.composed)},
                         {"twisted", atlas.chart(v.x).label(v.twisted)}});
    r.diagnostics.push_back("chart compatibility fails on (" + std::to_string(v.x) + "," +
                            std::to_string(v.y) + "," + std::to_string(v.z) + ") at " +
                            atlas.chart(v.z).label(v.gamma) + ": composed " +
                            atlas.chart(v.x).label(v.composed) + " vs twisted " +
                            atlas.chart(v.x).label(v.twisted));
  }
  r.payload["violations"] = viols;
  r.text.push_back("charts: " + std::to_string(atlas.chart_count()));
  r.text.push_back("compatibility: " + std::string(rep.ok ? "ok" : "violated"));
  if (!rep.ok) r.status = "check-failed";
}

void orbifold_shift(const Json& doc, const Options& o, RunReport& r) {
  ToralAction act = io::action_from_json(doc);
  Json classes = Json::array();
  for (const auto& cls : conjugacy_classes(act.group())) {
    int g = cls.front();
    DegreeShift ds = degree_shift(act, g, o.tolerance);
    classes.push_back(Json{{"representative", act.group().label(g)},
                           {"element_order", act.group().element_order(g)},
                           {"shift", io::rat_to_json(ds.shift)},
                           {"det_based", io::rat_to_json(ds.det_based)}});
    r.text.push_back("class of " + act.group().label(g) + ": shift " + format_rat(ds.shift) +
                     ", determinant route " + format_rat(ds.det_based) + " mod 1");
  }
  r.payload["classes"] = classes;
}

void orbifold_fixed(const Json& doc, const Options&, RunReport& r) {
  ToralAction act = io::action_from_json(doc);
  Json classes = Json::array();
  for (const auto& cls : conjugacy_classes(act.group())) {
    int g = cls.front();
    FixedLocus fl = fixed_locus(act, g);
    Json points = Json::array();
    for (const auto& p : fl.reps) {
      Json coords = Json::array();
      for (const Rat& x : p) coords.push_back(io::rat_to_json(x));
      points.push_back(coords);
    }
    classes.push_back(Json{{"representative", act.group().label(g)},
                           {"fixed_dim", fl.fixed_dim},
                           {"components", fl.components.str()},
                           {"points", points}});
    r.text.push_back("class of " + act.group().label(g) + ": fixed locus dimension " +
                     std::to_string(fl.fixed_dim) + ", " + fl.components.str() + " component(s)");
  }
  r.payload["classes"] = classes;
}

Json sector_json(const ToralAction& act, const SectorReport& s) {
  Json betti = Json::array();
  for (const Int& b : s.betti) betti.push_back(b.str());
  return Json{{"representative", act.group().label(s.class_rep)},
              {"shift", io::rat_to_json(s.shift)},
              {"fixed_dim", s.fixed_dim},
              {"components", s.components.str()},
              {"betti", betti}};
}

std::string sector_text(const ToralAction& act, const SectorReport& s) {
  std::string betti;
  for (size_t i = 0; i < s.betti.size(); ++i) {
    if (i) betti += ",";
    betti += s.betti[i].str();
  }
  return "sector of " + act.group().label(s.class_rep) + ": shift " + format_rat(s.shift) +
         ", fixed dimension " + std::to_string(s.fixed_dim) + ", " + s.components.str() +
         " component(s), betti " + betti;
}

void orbifold_sectors(const Json& doc, const Options& o, RunReport& r) {
  ToralAction act = io::action_from_json(doc);
  CrCohomology cr = cr_cohomology(act, o.tolerance);
  Json sectors = Json::array();
  for (const SectorReport& s : cr.sectors) {
    sectors.push_back(sector_json(act, s));
    r.text.push_back(sector_text(act, s));
  }
  r.payload["sectors"] = sectors;
}

void orbifold_cr(const Json& doc, const Options& o, RunReport& r) {
  ToralAction act = io::action_from_json(doc);
  CrCohomology cr = cr_cohomology(act, o.tolerance);
  Json table = Json::object();
  std::string line;
  for (const auto& [degree, dim] : cr.table) {
    table[format_rat(degree)] = dim.str();
    if (!line.empty()) line += ", ";
    line += format_rat(degree) + ":" + dim.str();
  }
  r.payload["table"] = table;
  Json sectors = Json::array();
  for (const SectorReport& s : cr.sectors) sectors.push_back(sector_json(act, s));
  r.payload["sectors"] = sectors;
  r.text.push_back("table: {" + line + "}");
  for (const SectorReport& s : cr.sectors) r.text.push_back(sector_text(act, s));
}

// ----- cech handlers ---------------------------------------------------------

void cech_h(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  int degree = io::get_int(doc, "degree");
  const Json& cf = io::get(doc, "coefficients");
  if (!cf.is_string()) throw parse_error("'coefficients' must be a string");
  Coefficients coeffs = io::coeffs_from_string(cf.get<std::string>());
  CohomologyResult res = cohomology(n, degree, coeffs);
  r.payload["degree"] = degree;
  r.payload["coefficients"] = coeffs.describe();
  r.payload["betti"] = res.betti;
  Json torsion = Json::array();
  std::string tline;
  for (const Int& t : res.torsion) {
    torsion.push_back(t.str());
    if (!tline.empty()) tline += ", ";
    tline += t.str();
  }
  r.payload["torsion"] = torsion;
  r.text.push_back("H^" + std::to_string(degree) + " over " + coeffs.describe() + ":");
  r.text.push_back("betti: " + std::to_string(res.betti));
  r.text.push_back("torsion: " + (tline.empty() ? "(none)" : tline));
}

AutomorphismCochain lambda_from_json(const Nerve& n, const FiniteGroup& g, const Json& doc) {
  AutomorphismCochain lambda = AutomorphismCochain::trivial(n, g);
  if (!doc.contains("lambda")) return lambda;
  const Json& maps = io::get(doc.at("lambda"), "maps");
  if (!maps.is_object()) throw parse_error("'maps' must map edge keys to element maps");
  for (const auto& [key, value] : maps.items()) {
    std::vector<int> edge = io::tuple_from_key(key);
    if (edge.size() != 2) throw parse_error("twist key '" + key + "' is not an edge");
    std::vector<int> f;
    for (const Json& v : value) f.push_back(io::element_from_json(g, v));
    if ((int)f.size() != g.order())
      throw parse_error("twist on '" + key + "' needs one value per group element");
    lambda.maps[n.index_of(edge)] = std::move(f);
  }
  return lambda;
}

void cech_check2(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  FiniteGroup g = io::group_from_json(io::get(doc, "group"));
  GroupCochain c = io::group_cochain_from_json(n, g, io::get(doc, "c"));
  AutomorphismCochain lambda = lambda_from_json(n, g, doc);
  NonabelianReport rep = nonabelian_2cocycle_check(n, g, lambda, c);
  r.payload["ok"] = rep.ok;
  Json cfail = Json::array(), tfail = Json::array();
  for (const auto& t : rep.cocycle_failures) {
    cfail.push_back(t);
    r.diagnostics.push_back("cocycle law fails on tetrahedron " + tuple_text(t));
  }
  for (const auto& t : rep.twist_failures) {
    tfail.push_back(t);
    r.diagnostics.push_back("twist law fails on triangle " + tuple_text(t));
  }
  r.payload["cocycle_failures"] = cfail;
  r.payload["twist_failures"] = tfail;
  r.text.push_back("cocycle condition: " + std::string(rep.ok ? "ok" : "violated"));
  if (!rep.ok) r.status = "check-failed";
}

void cochain_text_lines(RunReport& r, const Nerve& n, const std::string& name, const AbCochain& c) {
  const auto& simplices = n.simplices(c.degree);
  bool mod1 = c.coeffs.describe() == "Q/Z";
  bool any = false;
  for (size_t i = 0; i < simplices.size(); ++i) {
    if (c.values[i] == Rat(0)) continue;
    any = true;
    r.text.push_back(name + tuple_text(simplices[i]) + " = " + format_rat(c.values[i]) +
                     (mod1 ? " mod 1" : ""));
  }
  if (!any) r.text.push_back(name + " = 0");
}

void cech_equiv(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  AbCochain c = io::cochain_from_json(n, io::get(doc, "c"));
  AbCochain cprime = io::cochain_from_json(n, io::get(doc, "cprime"));
  std::optional<AbCochain> witness = are_cohomologous(n, c, cprime);
  r.payload["equivalent"] = witness.has_value();
  r.text.push_back("equivalent: " + yes_no(witness.has_value()));
  if (witness && witness->degree >= 0) {
    r.payload["witness"] = io::cochain_to_json(n, *witness);
    cochain_text_lines(r, n, "b", *witness);
  }
}

void cech_induce(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  FiniteGroup src = io::group_from_json(io::get(doc, "source"));
  FiniteGroup dst = io::group_from_json(io::get(doc, "target"));
  const Json& arr = io::get(doc, "map");
  if (!arr.is_array()) throw parse_error("'map' must be an array");
  std::vector<int> f;
  for (const Json& v : arr) f.push_back(io::element_from_json(dst, v));
  if ((int)f.size() != src.order())
    throw parse_error("'map' needs one value per source element");
  GroupCochain c = io::group_cochain_from_json(n, src, io::get(doc, "c"));
  GroupCochain out = induced_cocycle(f, src, dst, c);
  r.payload["induced"] = io::group_cochain_to_json(n, dst, out);
  const auto& simplices = n.simplices(out.degree);
  for (size_t i = 0; i < simplices.size(); ++i)
    r.text.push_back("c" + tuple_text(simplices[i]) + " = " + dst.label(out.values[i]));
}

void cech_obstruct(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  GroupExtension ext = io::extension_from_json(io::get(doc, "extension"));
  GroupCochain u = io::group_cochain_from_json(n, ext.base(), io::get(doc, "u"));
  bool require_central = false;
  if (doc.contains("require_central")) {
    if (!doc.at("require_central").is_boolean())
      throw parse_error("'require_central' must be a boolean");
    require_central = doc.at("require_central").get<bool>();
  }
  LiftingObstruction res = lifting_obstruction(ext, n, u, require_central);
  const FiniteGroup& band = ext.band();
  r.payload["central"] = res.central;
  r.payload["c"] = io::group_cochain_to_json(n, band, res.c);
  bool lambda_trivial = true;
  for (const auto& m : res.lambda.maps)
    for (int a = 0; a < band.order(); ++a)
      if (m[(size_t)a] != a) lambda_trivial = false;
  r.payload["lambda_trivial"] = lambda_trivial;

  const auto& tris = n.simplices(2);
  bool any = false;
  for (size_t i = 0; i < tris.size(); ++i) {
    if (res.c.values[i] == band.id()) continue;
    any = true;
    r.text.push_back("c" + tuple_text(tris[i]) + " = " + band.label(res.c.values[i]));
  }
  if (!any) r.text.push_back("c = identity");
  r.text.push_back("central band: " + yes_no(res.central));
  r.text.push_back("band twist trivial: " + yes_no(lambda_trivial));

  // For a central band that happens to be cyclic the obstruction lives in
  // ordinary cohomology with Z/m values; classify it there.
  if (res.central) {
    int m = band.order(), gen = -1;
    for (int a = 0; a < m && gen < 0; ++a)
      if (band.element_order(a) == m) gen = a;
    if (gen >= 0) {
      std::vector<int> log((size_t)m, 0);
      int power = band.id();
      for (int e = 0; e < m; ++e) {
        log[(size_t)power] = e;
        power = band.mul(power, gen);
      }
      AbCochain ab = AbCochain::zero(n, 2, Coefficients::Zmod(m));
      for (size_t i = 0; i < res.c.values.size(); ++i)
        ab.values[i] = Rat(log[(size_t)res.c.values[i]]);
      std::optional<AbCochain> witness =
          are_cohomologous(n, ab, AbCochain::zero(n, 2, Coefficients::Zmod(m)));
      r.payload["trivial_class"] = witness.has_value();
      r.text.push_back("class: " + std::string(witness.has_value() ? "trivial" : "nontrivial"));
      if (witness && witness->degree >= 0) {
        r.payload["witness"] = io::cochain_to_json(n, *witness);
        cochain_text_lines(r, n, "b", *witness);
      }
    }
  }
}

// ----- gerbe handlers --------------------------------------------------------

void gerbe_holonomy(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  GerbeConnection g = io::gerbe_from_json(n, doc);
  g.validate(n);
  AbCochain d = holonomy_cocycle(n, g);
  r.payload["d"] = io::cochain_to_json(n, d);
  const auto& tris = n.simplices(2);
  for (size_t i = 0; i < tris.size(); ++i)
    r.text.push_back("d" + tuple_text(tris[i]) + " = " + format_rat(d.values[i]) + " mod 1");
}

void gerbe_surface(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  GerbeConnection g = io::gerbe_from_json(n, doc);
  g.validate(n);
  OrientedSurface s = [&] {
    if (!doc.contains("orientation")) return auto_orient(n);
    const Json& o = doc.at("orientation");
    if (o.is_string() && o.get<std::string>() == "auto") return auto_orient(n);
    return make_surface(n, io::int_list(o, "orientation"));
  }();
  Rat hol = surface_holonomy(g, s);
  r.payload["holonomy"] = format_rat(hol);
  r.payload["orientation"] = s.orientation;
  r.text.push_back("holonomy: " + format_rat(hol) + " mod 1");
}

void gerbe_defect(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  std::vector<RatMat> omega = io::mat_list_from_json(io::get(doc, "omega"), "omega", n.count(0));
  std::vector<RatMat> u = io::mat_list_from_json(io::get(doc, "u"), "u", n.count(1));
  CurvatureDefect cd = curvature_defect(n, omega, u);
  r.payload["strict"] = cd.strict;
  r.payload["law_holds"] = cd.law_holds;
  r.payload["flat"] = cd.flat;
  Json defects = Json::array();
  const auto& edges = n.simplices(1);
  for (size_t e = 0; e < edges.size(); ++e)
    defects.push_back(Json{{"edge", edges[e]}, {"matrix", io::rat_mat_to_json(cd.defect[e])}});
  r.payload["defect"] = defects;
  r.text.push_back("strict transitions: " + yes_no(cd.strict));
  r.text.push_back("twisted cocycle law: " + std::string(cd.law_holds ? "holds" : "violated"));
  r.text.push_back("flat: " + yes_no(cd.flat));
  for (size_t e = 0; e < edges.size(); ++e) {
    bool zero = true;
    for (size_t i = 0; i < cd.defect[e].rows() && zero; ++i)
      for (size_t j = 0; j < cd.defect[e].cols(); ++j)
        if (!(cd.defect[e](i, j) == Rat(0))) {
          zero = false;
          break;
        }
    if (!zero)
      r.text.push_back("defect" + tuple_text(edges[e]) + " = " + mat_text(cd.defect[e]));
  }
}

void gerbe_seq3(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  AbCochain ustar = io::cochain_from_json(n, io::get(doc, "ustar"));
  TwoSequenceCocycle res = two_sequence_3cocycle(n, ustar);
  r.payload["cocycle"] = io::cochain_to_json(n, res.cocycle);
  r.payload["closed"] = res.closed;
  cochain_text_lines(r, n, "c", res.cocycle);
  r.text.push_back("closed: " + yes_no(res.closed));
}

void gerbe_seq4(const Json& doc, const Options&, RunReport& r) {
  Nerve n = io::nerve_from_json(doc);
  AbCochain cstar = io::cochain_from_json(n, io::get(doc, "cstar"));
  FourCocycleReport res = two_sequence_4cocycle(n, cstar);
  r.payload["cocycle"] = io::cochain_to_json(n, res.cocycle);
  r.payload["closed"] = res.closed;
  r.payload["trivial_class"] = res.trivial_class;
  Json torsion = Json::array();
  for (const Int& t : res.h3.torsion) torsion.push_back(t.str());
  r.payload["h3"] = Json{{"betti", res.h3.betti}, {"torsion", torsion}};
  cochain_text_lines(r, n, "c", res.cocycle);
  r.text.push_back("closed: " + yes_no(res.closed));
  r.text.push_back("trivial class: " + yes_no(res.trivial_class));
  r.text.push_back("H^3 betti: " + std::to_string(res.h3.betti));
}

// ----- fixtures, input, emission ---------------------------------------------

void fixtures_list(const Options&, RunReport& r) {
  Json arr = Json::array();
  for (const fixtures::Fixture& f : fixtures::corpus()) {
    std::string cmd;
    for (size_t i = 0; i < f.command.size(); ++i) {
      if (i) cmd += " ";
      cmd += f.command[i];
    }
    arr.push_back(Json{{"name", f.name}, {"description", f.description}, {"command", f.command}});
    r.text.push_back(f.name + " — " + f.description + " (default: " + cmd + ")");
  }
  r.payload["fixtures"] = arr;
}

Json load_input(const Options& opts) {
  if (opts.input.empty())
    throw parse_error("no input document given; use --input PATH or --input fixture:NAME");
  const std::string prefix = "fixture:";
  if (opts.input.rfind(prefix, 0) == 0) {
    std::string name = opts.input.substr(prefix.size());
    const fixtures::Fixture* f = fixtures::find(name);
    if (!f) {
      std::string names;
      for (const fixtures::Fixture& g : fixtures::corpus()) {
        if (!names.empty()) names += ", ";
        names += g.name;
      }
      throw parse_error("unknown fixture '" + name + "'; available: " + names);
    }
    return f->document;
  }
  std::ifstream in(opts.input);
  if (!in) throw parse_error("cannot open input file '" + opts.input + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw parse_error("input is not valid JSON: " + std::string(e.what()));
  }
}

void emit(const RunReport& r, const Options& opts) {
  if (opts.format == "json") {
    Json out;
    out["status"] = r.status;
    out["payload"] = r.payload;
    out["diagnostics"] = r.diagnostics;
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const std::string& line : r.text) std::cout << line << "\n";
  for (const std::string& d : r.diagnostics) std::cout << "diagnostic: " << d << "\n";
  std::cout << "status: " << r.status << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cocycle, invariant-form, and orbifold-cohomology calculator"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--input", opts.input, "input document path, or fixture:NAME");
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--tolerance", opts.tolerance, "tolerance for eigenvalue-angle snapping")
      ->capture_default_str();
  app.add_option("--max-group-order", opts.max_group_order, "bound for subgroup enumeration")
      ->capture_default_str();

  using Handler = std::function<void(const Json&, const Options&, RunReport&)>;
  std::map<std::string, Handler> handlers{
      {"lie/validate", lie_validate},   {"lie/betti", lie_betti},
      {"lie/invforms", lie_invforms},   {"lie/nu", lie_nu},
      {"lie/doubleext", lie_doubleext}, {"lie/curvature", lie_curvature},
      {"orbifold/classes", orbifold_classes}, {"orbifold/atlas", orbifold_atlas},
      {"orbifold/shift", orbifold_shift}, {"orbifold/fixed", orbifold_fixed},
      {"orbifold/sectors", orbifold_sectors}, {"orbifold/cr", orbifold_cr},
      {"cech/h", cech_h},               {"cech/check2", cech_check2},
      {"cech/equiv", cech_equiv},       {"cech/induce", cech_induce},
      {"cech/obstruct", cech_obstruct}, {"gerbe/holonomy", gerbe_holonomy},
      {"gerbe/surface", gerbe_surface}, {"gerbe/defect", gerbe_defect},
      {"gerbe/seq3", gerbe_seq3},       {"gerbe/seq4", gerbe_seq4},
  };

  std::string selected;
  const std::map<std::string, std::pair<std::string, std::vector<std::string>>> tree{
      {"lie", {"Lie algebra validation, cohomology, and invariant forms",
               {"validate", "betti", "invforms", "nu", "doubleext", "curvature"}}},
      {"orbifold", {"finite group data, chart atlases, and torus-quotient cohomology",
                    {"classes", "atlas", "shift", "fixed", "sectors", "cr"}}},
      {"cech", {"nerve cohomology and cocycle algebra",
                {"h", "check2", "equiv", "induce", "obstruct"}}},
      {"gerbe", {"holonomy, curvature defects, and sequence cocycles",
                 {"holonomy", "surface", "defect", "seq3", "seq4"}}},
  };
  for (const auto& [group, info] : tree) {
    CLI::App* sub = app.add_subcommand(group, info.first);
    sub->require_subcommand(1);
    sub->fallthrough();
    for (const std::string& leaf : info.second) {
      CLI::App* cmd = sub->add_subcommand(leaf);
      cmd->fallthrough();
      std::string key = group + "/" + leaf;
      cmd->callback([&selected, key] { selected = key; });
    }
  }

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list or dump the bundled inputs");
  fixtures_cmd->fallthrough();
  fixtures_cmd->callback([&selected] {
    if (selected.empty()) selected = "fixtures/list";
  });
  std::string dump_name;
  CLI::App* dump_cmd = fixtures_cmd->add_subcommand("dump", "print one fixture document");
  dump_cmd->fallthrough();
  dump_cmd->add_option("name", dump_name, "fixture name")->required();
  dump_cmd->callback([&selected] { selected = "fixtures/dump"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunReport report;
  try {
    if (selected == "fixtures/list") {
      fixtures_list(opts, report);
    } else if (selected == "fixtures/dump") {
      const fixtures::Fixture* f = fixtures::find(dump_name);
      if (!f) throw parse_error("unknown fixture '" + dump_name + "'");
      std::cout << f->document.dump(2) << "\n";
      return 0;
    } else {
      Json doc = load_input(opts);
      handlers.at(selected)(doc, opts, report);
    }
  } catch (const parse_error& e) {
    report = RunReport{"invalid-input", Json::object(), {e.what()}, {}};
  } catch (const check_error& e) {
    report = RunReport{"check-failed", Json::object(), {e.what()}, {}};
  } catch (const Json::exception& e) {
    report = RunReport{"invalid-input", Json::object(),
                       {"input document is malformed: " + std::string(e.what())}, {}};
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  emit(report, opts);
  if (report.status == "ok") return 0;
  return report.status == "check-failed" ? 1 : 2;
}
