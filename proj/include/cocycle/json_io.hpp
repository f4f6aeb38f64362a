#pragma once

#include <json.hpp>

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "cocycle/atlas.hpp"
#include "cocycle/cech.hpp"
#include "cocycle/cochain.hpp"
#include "cocycle/group.hpp"
#include "cocycle/holonomy.hpp"
#include "cocycle/invariant_forms.hpp"
#include "cocycle/lie_algebra.hpp"
#include "cocycle/nerve.hpp"
#include "cocycle/toral_action.hpp"

namespace cocycle::io {

using Json = nlohmann::ordered_json;

// ----- field access with readable failures ----------------------------------

inline const Json& get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int get_int(const Json& j, const char* key) {
  const Json& v = get(j, key);
  if (!v.is_number_integer()) throw parse_error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

inline std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw parse_error(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// ----- rationals and matrices ------------------------------------------------

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw parse_error("rationals must be integers or 'p/q' strings");
}

inline Json rat_to_json(const Rat& r) { return format_rat(r); }

inline RatMat rat_mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("matrix must be a non-empty array of rows");
  size_t cols = 0;
  std::vector<std::vector<Rat>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw parse_error("matrix rows must be arrays");
    std::vector<Rat> r;
    for (const Json& v : row) r.push_back(rat_from_json(v));
    if (rows.empty()) cols = r.size();
    if (r.size() != cols || cols == 0) throw parse_error("matrix rows must have equal nonzero length");
    rows.push_back(std::move(r));
  }
  RatMat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
  return m;
}

inline Json rat_mat_to_json(const RatMat& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline IntMat int_mat_from_json(const Json& j) {
  RatMat m = rat_mat_from_json(j);
  IntMat out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t c = 0; c < m.cols(); ++c) {
      if (!is_integer(m(i, c))) throw parse_error("matrix entries must be integers");
      out(i, c) = num(m(i, c));
    }
  return out;
}

inline Json int_mat_to_json(const IntMat& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

// ----- Lie algebras and forms ------------------------------------------------

inline LieAlgebra algebra_from_json(const Json& j) {
  int dim = get_int(j, "dim");
  if (dim <= 0) throw parse_error("algebra dimension must be positive");
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    for (const Json& b : get(j, "basis")) {
      if (!b.is_string()) throw parse_error("basis names must be strings");
      basis.push_back(b.get<std::string>());
    }
    if ((int)basis.size() != dim) throw parse_error("need one basis name per dimension");
  } else {
    for (int i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i));
  }
  LieAlgebra L(dim, basis);
  if (j.contains("brackets")) {
    const Json& brs = get(j, "brackets");
    if (!brs.is_array()) throw parse_error("'brackets' must be an array");
    for (const Json& br : brs) {
      int i = get_int(br, "i"), jj = get_int(br, "j");
      if (i < 0 || i >= dim || jj < 0 || jj >= dim) throw parse_error("bracket index out of range");
      std::vector<Rat> coeffs(dim, Rat(0));
      const Json& cs = get(br, "coeffs");
      if (!cs.is_object()) throw parse_error("'coeffs' must map basis index to value");
      for (const auto& [key, value] : cs.items()) {
        int k;
        try {
          k = std::stoi(key);
        } catch (...) {
          throw parse_error("bracket coefficient key must be a basis index, got '" + key + "'");
        }
        if (k < 0 || k >= dim) throw parse_error("bracket coefficient index out of range");
        coeffs[(size_t)k] = rat_from_json(value);
      }
      L.set_bracket(i, jj, coeffs);
    }
  }
  return L;
}

inline Json algebra_to_json(const LieAlgebra& L) {
  Json out;
  out["dim"] = L.dim();
  out["basis"] = L.basis();
  Json brs = Json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      const auto& c = L.bracket(i, j);
      Json coeffs = Json::object();
      for (int k = 0; k < L.dim(); ++k)
        if (!(c[(size_t)k] == Rat(0))) coeffs[std::to_string(k)] = rat_to_json(c[(size_t)k]);
      if (!coeffs.empty()) brs.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  out["brackets"] = brs;
  return out;
}

inline BilinearForm form_from_json(const Json& j) {
  BilinearForm b;
  b.gram = rat_mat_from_json(j.is_object() && j.contains("gram") ? get(j, "gram") : j);
  if (!b.gram.is_square()) throw parse_error("gram matrix must be square");
  b.dim = (int)b.gram.rows();
  return b;
}

inline Json form_to_json(const BilinearForm& b) {
  Json out;
  out["dim"] = b.dim;
  out["gram"] = rat_mat_to_json(b.gram);
  return out;
}

inline std::string key_from_tuple(const std::vector<int>& t) {
  std::string key;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(t[i]);
  }
  return key;
}

inline std::vector<int> tuple_from_key(const std::string& key) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= key.size()) {
    size_t comma = key.find(',', pos);
    std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw parse_error("");
    } catch (...) {
      throw parse_error("bad simplex key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline InvariantForm invariant_form_from_json(const Json& j) {
  InvariantForm f = InvariantForm::zero(get_int(j, "degree"), get_int(j, "algebra_dim"),
                                        j.contains("value_dim") ? get_int(j, "value_dim") : 1);
  CombIndex ix(f.algebra_dim, f.degree);
  const Json& comps = get(j, "components");
  if (!comps.is_object()) throw parse_error("'components' must map index tuples to values");
  for (const auto& [key, value] : comps.items()) {
    std::vector<int> tuple = tuple_from_key(key);
    if ((int)tuple.size() != f.degree) throw parse_error("component key '" + key + "' has wrong arity");
    long pos = ix.index(tuple);
    if (pos < 0) throw parse_error("component key '" + key + "' is not an increasing tuple in range");
    std::vector<Rat> v;
    if (value.is_array())
      for (const Json& x : value) v.push_back(rat_from_json(x));
    else
      v.push_back(rat_from_json(value));
    if ((int)v.size() != f.value_dim) throw parse_error("component '" + key + "' has wrong value size");
    f.comps[(size_t)pos] = std::move(v);
  }
  return f;
}

inline Json invariant_form_to_json(const InvariantForm& f) {
  Json out;
  out["degree"] = f.degree;
  out["algebra_dim"] = f.algebra_dim;
  out["value_dim"] = f.value_dim;
  Json comps = Json::object();
  CombIndex ix(f.algebra_dim, f.degree);
  for (size_t p = 0; p < f.comps.size(); ++p) {
    bool zero = true;
    for (const Rat& v : f.comps[p])
      if (!(v == Rat(0))) zero = false;
    if (zero) continue;
    Json vals = Json::array();
    for (const Rat& v : f.comps[p]) vals.push_back(rat_to_json(v));
    comps[key_from_tuple(ix.tuple(p))] = vals;
  }
  out["components"] = comps;
  return out;
}

// ----- finite groups ---------------------------------------------------------

inline FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("group document must be an object");
  if (j.contains("perm_generators")) {
    const Json& gens = j.at("perm_generators");
    if (!gens.is_array() || gens.empty()) throw parse_error("'perm_generators' must be a non-empty array");
    std::vector<std::vector<int>> perms;
    for (const Json& g : gens) perms.push_back(int_list(g, "permutation"));
    return FiniteGroup::from_perm_generators(perms);
  }
  const Json& table = get(j, "table");
  if (!table.is_array()) throw parse_error("'table' must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& r : table) rows.push_back(int_list(r, "table row"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const Json& l : j.at("labels")) {
      if (!l.is_string()) throw parse_error("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteGroup(rows, labels);
}

inline Json group_to_json(const FiniteGroup& g) {
  Json out;
  out["order"] = g.order();
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  out["table"] = table;
  out["labels"] = g.labels();
  return out;
}

inline int element_from_json(const FiniteGroup& g, const Json& j) {
  if (j.is_number_integer()) {
    int v = j.get<int>();
    if (v < 0 || v >= g.order()) throw parse_error("group element index out of range");
    return v;
  }
  if (j.is_string()) return g.label_index(j.get<std::string>());
  throw parse_error("group elements must be indices or labels");
}

// ----- toral actions ---------------------------------------------------------

inline ToralAction action_from_json(const Json& j) {
  FiniteGroup grp = group_from_json(get(j, "group"));
  int n = get_int(j, "n");
  const Json& rz = get(j, "rho_Z");
  if (!rz.is_object()) throw parse_error("'rho_Z' must map element labels to integer matrices");
  std::vector<IntMat> rho_z;
  for (int a = 0; a < grp.order(); ++a) {
    const std::string& label = grp.label(a);
    if (!rz.contains(label)) throw parse_error("rho_Z is missing element '" + label + "'");
    rho_z.push_back(int_mat_from_json(rz.at(label)));
  }
  std::vector<CMat> rho_c;
  if (j.contains("rho_C")) {
    const Json& rc = j.at("rho_C");
    if (!rc.is_object()) throw parse_error("'rho_C' must map element labels to complex matrices");
    for (int a = 0; a < grp.order(); ++a) {
      const std::string& label = grp.label(a);
      if (!rc.contains(label)) throw parse_error("rho_C is missing element '" + label + "'");
      const Json& mat = rc.at(label);
      if (!mat.is_array() || mat.empty()) throw parse_error("complex matrix must be a non-empty array");
      size_t rows = mat.size(), cols = mat[0].is_array() ? mat[0].size() : 0;
      CMat m(rows, cols);
      for (size_t r = 0; r < rows; ++r) {
        const Json& row = mat[r];
        if (!row.is_array() || row.size() != cols)
          throw parse_error("complex matrix rows must have equal length");
        for (size_t c = 0; c < cols; ++c) {
          const Json& entry = row[c];
          if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
              !entry[1].is_number())
            throw parse_error("complex entries must be [re, im] pairs");
          m((Eigen::Index)r, (Eigen::Index)c) =
              std::complex<double>(entry[0].get<double>(), entry[1].get<double>());
        }
      }
      rho_c.push_back(std::move(m));
    }
  }
  return ToralAction(std::move(grp), n, std::move(rho_z), std::move(rho_c));
}

// ----- nerves and cochains ---------------------------------------------------

inline Nerve nerve_from_json(const Json& j) {
  const Json& facets = j.is_object() && j.contains("facets") ? j.at("facets") : j;
  if (!facets.is_array()) throw parse_error("'facets' must be an array");
  std::vector<std::vector<int>> fs;
  for (const Json& f : facets) fs.push_back(int_list(f, "facet"));
  return Nerve::from_facets(fs);
}

inline Json nerve_to_json(const Nerve& n) {
  Json out;
  Json facets = Json::array();
  // A simplex is a facet when it is not a proper face of any stored simplex.
  for (int k = 0; k <= n.top_degree(); ++k)
    for (const auto& s : n.simplices(k)) {
      bool maximal = true;
      for (const auto& bigger : n.simplices(k + 1)) {
        if (std::includes(bigger.begin(), bigger.end(), s.begin(), s.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) facets.push_back(s);
    }
  out["facets"] = facets;
  return out;
}

inline Coefficients coeffs_from_string(const std::string& s) {
  if (s == "Z") return Coefficients::Z();
  if (s == "Q") return Coefficients::Q();
  if (s == "Q/Z") return Coefficients::Qmod1();
  if (s.size() > 2 && s[0] == 'Z' && s[1] == '/') {
    Int m;
    try {
      m = Int(s.substr(2));
    } catch (...) {
      throw parse_error("bad coefficient string '" + s + "'");
    }
    return Coefficients::Zmod(m);
  }
  throw parse_error("bad coefficient string '" + s + "' (want Z, Q, Z/m, or Q/Z)");
}

inline AbCochain cochain_from_json(const Nerve& n, const Json& j) {
  int degree = get_int(j, "degree");
  const Json& cf = get(j, "coefficients");
  if (!cf.is_string()) throw parse_error("'coefficients' must be a string");
  Coefficients coeffs = coeffs_from_string(cf.get<std::string>());
  if (degree < 0) throw parse_error("cochain degree must be non-negative");
  AbCochain c = AbCochain::zero(n, degree, coeffs);
  if (j.contains("values")) {
    const Json& vals = j.at("values");
    if (!vals.is_object()) throw parse_error("'values' must map simplex keys to rationals");
    for (const auto& [key, value] : vals.items()) {
      std::vector<int> tuple = tuple_from_key(key);
      if ((int)tuple.size() != degree + 1)
        throw parse_error("key '" + key + "' has wrong arity for degree " + std::to_string(degree));
      c.values[n.index_of(tuple)] = coeffs.normalize(rat_from_json(value));
    }
  }
  return c;
}

inline Json cochain_to_json(const Nerve& n, const AbCochain& c) {
  Json out;
  out["degree"] = c.degree;
  out["coefficients"] = c.coeffs.describe();
  Json vals = Json::object();
  const auto& simplices = n.simplices(c.degree);
  for (size_t i = 0; i < simplices.size(); ++i) {
    if (c.values[i] == Rat(0)) continue;
    vals[key_from_tuple(simplices[i])] = rat_to_json(c.values[i]);
  }
  out["values"] = vals;
  return out;
}

inline GroupCochain group_cochain_from_json(const Nerve& n, const FiniteGroup& g, const Json& j) {
  GroupCochain c;
  c.degree = get_int(j, "degree");
  if (c.degree < 0) throw parse_error("cochain degree must be non-negative");
  c.values.assign(n.count(c.degree), g.id());
  const Json& vals = get(j, "values");
  if (!vals.is_object()) throw parse_error("'values' must map simplex keys to elements");
  for (const auto& [key, value] : vals.items()) {
    std::vector<int> tuple = tuple_from_key(key);
    if ((int)tuple.size() != c.degree + 1)
      throw parse_error("key '" + key + "' has wrong arity for degree " + std::to_string(c.degree));
    c.values[n.index_of(tuple)] = element_from_json(g, value);
  }
  return c;
}

inline Json group_cochain_to_json(const Nerve& n, const FiniteGroup& g, const GroupCochain& c) {
  Json out;
  out["degree"] = c.degree;
  Json vals = Json::object();
  const auto& simplices = n.simplices(c.degree);
  for (size_t i = 0; i < simplices.size(); ++i)
    vals[key_from_tuple(simplices[i])] = g.label(c.values[i]);
  out["values"] = vals;
  return out;
}

inline GroupExtension extension_from_json(const Json& j) {
  FiniteGroup h = group_from_json(get(j, "H"));
  FiniteGroup lp = group_from_json(get(j, "Lprime"));
  FiniteGroup l = group_from_json(get(j, "L"));
  auto map_of = [&](const char* key, const FiniteGroup& dst) {
    const Json& arr = get(j, key);
    if (!arr.is_array()) throw parse_error(std::string("'") + key + "' must be an array");
    std::vector<int> out;
    for (const Json& v : arr) out.push_back(element_from_json(dst, v));
    return out;
  };
  return GroupExtension(h, lp, l, map_of("inclusion", lp), map_of("projection", l),
                        map_of("section", lp));
}

inline GerbeConnection gerbe_from_json(const Nerve& n, const Json& j) {
  GerbeConnection g;
  g.c = j.contains("c") ? cochain_from_json(n, j.at("c"))
                        : AbCochain::zero(n, 2, Coefficients::Qmod1());
  g.a = j.contains("a") ? cochain_from_json(n, j.at("a"))
                        : AbCochain::zero(n, 1, Coefficients::Qmod1());
  g.h = j.contains("h") ? cochain_from_json(n, j.at("h"))
                        : AbCochain::zero(n, 0, Coefficients::Qmod1());
  return g;
}

inline std::vector<RatMat> mat_list_from_json(const Json& j, const char* what, size_t expected) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of matrices");
  std::vector<RatMat> out;
  for (const Json& m : j) out.push_back(rat_mat_from_json(m));
  if (out.size() != expected)
    throw parse_error(std::string(what) + " needs " + std::to_string(expected) + " matrices, got " +
                      std::to_string(out.size()));
  return out;
}

inline ChartAtlas atlas_from_json(const Json& j) {
  const Json& charts = get(j, "charts");
  if (!charts.is_array() || charts.empty()) throw parse_error("'charts' must be a non-empty array");
  std::vector<FiniteGroup> groups;
  for (const Json& c : charts) groups.push_back(group_from_json(c));
  ChartAtlas atlas(std::move(groups));
  if (j.contains("homs")) {
    const Json& homs = j.at("homs");
    if (!homs.is_array()) throw parse_error("'homs' must be an array");
    for (const Json& h : homs) {
      int x = get_int(h, "x"), y = get_int(h, "y");
      std::vector<int> f;
      for (const Json& v : get(h, "map")) f.push_back(element_from_json(atlas.chart(x), v));
      atlas.add_hom(x, y, f);
    }
  }
  if (j.contains("twists")) {
    const Json& twists = j.at("twists");
    if (!twists.is_array()) throw parse_error("'twists' must be an array");
    for (const Json& t : twists) {
      int x = get_int(t, "x"), y = get_int(t, "y"), z = get_int(t, "z");
      atlas.add_twist(x, y, z, element_from_json(atlas.chart(x), get(t, "c")));
    }
  }
  return atlas;
}

}  // namespace cocycle::io
