#pragma once

#include <string>
#include <vector>

#include "cocycle/cech.hpp"
#include "cocycle/cochain.hpp"
#include "cocycle/linalg.hpp"
#include "cocycle/nerve.hpp"
#include "cocycle/surface.hpp"

namespace cocycle {

// circle-valued gerbe data: classifying 2-cocycle, comparison 1-cochain,
// curving primitives. Everything lives in rationals mod 1.
struct GerbeConnection {
  AbCochain c;  // degree 2
  AbCochain a;  // degree 1
  AbCochain h;  // degree 0

  void validate(const Nerve& n) const {
    if (c.degree != 2 || a.degree != 1 || h.degree != 0)
      throw parse_error("gerbe data must be cochains of degrees 2, 1, 0");
    for (const AbCochain* x : {&c, &a, &h}) {
      if (x->coeffs.kind != CoeffKind::rationals_mod1)
        throw parse_error("gerbe data must take values in rationals mod 1");
      x->ensure_shape(n);
    }
  }
};

// d(ijl) = -c(ijl) - a(jl) + a(il) - a(ij) mod 1, the triangle holonomy of
// the flat model. Closed whenever c is, which is re-checked on the way out.
inline AbCochain holonomy_cocycle(const Nerve& n, const GerbeConnection& g) {
  g.validate(n);
  AbCochain d = AbCochain::zero(n, 2, Coefficients::Qmod1());
  for (const auto& tri : n.simplices(2)) {
    int i = tri[0], j = tri[1], l = tri[2];
    Rat v = -g.c.values[n.index_of(tri)] - g.a.values[n.index_of({j, l})] +
            g.a.values[n.index_of({i, l})] - g.a.values[n.index_of({i, j})];
    d.values[n.index_of(tri)] = mod1(v);
  }
  auto tets = virtual_simplices(n, 2);
  std::vector<Rat> dc = coboundary_on(n, g.c, tets);
  std::vector<Rat> dd = coboundary_on(n, d, tets);
  bool c_closed = true, d_closed = true;
  for (size_t t = 0; t < tets.size(); ++t) {
    if (!(mod1(dc[t]) == Rat(0))) c_closed = false;
    if (!(mod1(dd[t]) == Rat(0))) d_closed = false;
  }
  if (c_closed && !d_closed) throw std::logic_error("holonomy cocycle failed to stay closed");
  return d;
}

inline Rat surface_holonomy(const GerbeConnection& g, const OrientedSurface& s) {
  AbCochain d = holonomy_cocycle(s.nerve, g);
  Rat total(0);
  for (size_t t = 0; t < s.nerve.count(2); ++t) total += Rat(s.orientation[t]) * d.values[t];
  return mod1(total);
}

// ----- matrix-valued curvature and connective data --------------------------

struct CurvatureDefect {
  std::vector<RatMat> defect;  // one matrix per edge, nerve order
  bool strict = true;          // u composes exactly on every triangle
  bool law_holds = true;       // Ad-twisted cocycle law of the defect
  bool flat = true;            // all defects vanish
};

namespace detail {

inline RatMat conj_by_inverse(const RatMat& u, const RatMat& x) {
  RatMat ui = inverse(u);
  return ui * x * u;
}

inline void require_invertible(const RatMat& u) {
  if (!u.is_square() || det(u) == Rat(0)) throw check_error("transition matrix is singular");
}

}  // namespace detail

// Delta(ij) = Omega_i - Ad(u_ij^{-1})(Omega_j). When the u compose strictly
// the twisted cocycle law Delta_ij + Ad(u_ij^{-1})Delta_jl - Delta_il = 0 is
// an identity; both facts are reported.
inline CurvatureDefect curvature_defect(const Nerve& n, const std::vector<RatMat>& omega,
                                        const std::vector<RatMat>& u) {
  if (omega.size() != n.count(0)) throw parse_error("need one curvature matrix per vertex");
  if (u.size() != n.count(1)) throw parse_error("need one transition matrix per edge");
  size_t dim = omega.empty() ? 0 : omega[0].rows();
  for (const auto& m : omega)
    if (m.rows() != dim || m.cols() != dim) throw parse_error("curvature size mismatch");
  for (const auto& m : u) {
    if (m.rows() != dim || m.cols() != dim) throw parse_error("transition size mismatch");
    detail::require_invertible(m);
  }

  std::vector<int> vert(n.vertices());
  auto vertex_slot = [&](int v) {
    return (size_t)(std::lower_bound(vert.begin(), vert.end(), v) - vert.begin());
  };

  CurvatureDefect out;
  for (const auto& e : n.simplices(1)) {
    const RatMat& uij = u[n.index_of(e)];
    out.defect.push_back(omega[vertex_slot(e[0])] - detail::conj_by_inverse(uij, omega[vertex_slot(e[1])]));
  }
  RatMat zero(dim, dim);
  for (const auto& d : out.defect)
    if (!(d == zero)) out.flat = false;

  for (const auto& tri : n.simplices(2)) {
    int i = tri[0], j = tri[1], l = tri[2];
    const RatMat& uij = u[n.index_of({i, j})];
    const RatMat& ujl = u[n.index_of({j, l})];
    const RatMat& uil = u[n.index_of({i, l})];
    if (!(ujl * uij == uil)) out.strict = false;
    RatMat lhs = out.defect[n.index_of({i, j})] +
                 detail::conj_by_inverse(uij, out.defect[n.index_of({j, l})]) -
                 out.defect[n.index_of({i, l})];
    if (!(lhs == zero)) out.law_holds = false;
  }
  if (out.strict && !out.law_holds)
    throw std::logic_error("strict transitions must satisfy the twisted cocycle law");
  return out;
}

struct ConnectiveReport {
  std::vector<RatMat> edge_field;      // alpha_ij per edge
  std::vector<RatMat> triangle_field;  // telescoped combination per triangle
  bool trivial = true;                 // all triangle fields vanish
};

// Constant connective data: per-vertex alpha_i, per-edge u_ij, per-triangle
// central twist c_ijl with u_jl u_ij = u_il c_ijl. Computes
//   alpha_ij = alpha_i - Ad(u_ij^{-1}) alpha_j
// and on every triangle the combination
//   K = Ad(u_ij^{-1})(alpha_jl) - alpha_il + alpha_ij,
// which must telescope to beta - Ad(c^{-1}) beta with beta = Ad(u_il^{-1}) alpha_l.
inline ConnectiveReport connective_consistency(const Nerve& n, const std::vector<RatMat>& alpha,
                                               const std::vector<RatMat>& u,
                                               const std::vector<RatMat>& c) {
  if (alpha.size() != n.count(0)) throw parse_error("need one algebra value per vertex");
  if (u.size() != n.count(1)) throw parse_error("need one group element per edge");
  if (c.size() != n.count(2)) throw parse_error("need one twist per triangle");
  size_t dim = alpha.empty() ? 0 : alpha[0].rows();
  for (const auto& m : alpha)
    if (m.rows() != dim || m.cols() != dim) throw parse_error("algebra value size mismatch");
  for (const auto& m : u) {
    if (m.rows() != dim || m.cols() != dim) throw parse_error("group element size mismatch");
    detail::require_invertible(m);
  }
  for (const auto& m : c) {
    if (m.rows() != dim || m.cols() != dim) throw parse_error("twist size mismatch");
    detail::require_invertible(m);
  }

  std::vector<int> vert(n.vertices());
  auto vertex_slot = [&](int v) {
    return (size_t)(std::lower_bound(vert.begin(), vert.end(), v) - vert.begin());
  };

  for (const auto& tri : n.simplices(2)) {
    int i = tri[0], j = tri[1], l = tri[2];
    const RatMat& uij = u[n.index_of({i, j})];
    const RatMat& ujl = u[n.index_of({j, l})];
    const RatMat& uil = u[n.index_of({i, l})];
    if (!(ujl * uij == uil * c[n.index_of(tri)]))
      throw check_error("transition maps do not compose up to the supplied twist on triangle (" +
                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) +
                        ")");
  }

  ConnectiveReport out;
  for (const auto& e : n.simplices(1)) {
    const RatMat& uij = u[n.index_of(e)];
    out.edge_field.push_back(alpha[vertex_slot(e[0])] -
                             detail::conj_by_inverse(uij, alpha[vertex_slot(e[1])]));
  }
  RatMat zero(dim, dim);
  for (const auto& tri : n.simplices(2)) {
    int i = tri[0], j = tri[1], l = tri[2];
    const RatMat& uij = u[n.index_of({i, j})];
    const RatMat& uil = u[n.index_of({i, l})];
    RatMat k = detail::conj_by_inverse(uij, out.edge_field[n.index_of({j, l})]) -
               out.edge_field[n.index_of({i, l})] + out.edge_field[n.index_of({i, j})];
    RatMat beta = detail::conj_by_inverse(uil, alpha[vertex_slot(l)]);
    RatMat expected = beta - detail::conj_by_inverse(c[n.index_of(tri)], beta);
    if (!(k == expected))
      throw std::logic_error("telescoped connective combination missed the conjugation defect");
    out.triangle_field.push_back(k);
    if (!(k == zero)) out.trivial = false;
  }
  return out;
}

// ----- higher sequence cocycles ---------------------------------------------

struct TwoSequenceCocycle {
  AbCochain cocycle;      // one degree up from the input
  bool closed = true;     // delta vanishes on real and virtual simplices
};

// degree-1 comparison data: the induced 2-cocycle is the alternating sum
// around each triangle, i.e. the coboundary; closedness is checked on every
// tetrahedral extension, virtual ones included.
inline TwoSequenceCocycle two_sequence_3cocycle(const Nerve& n, const AbCochain& ustar) {
  if (ustar.degree != 1) throw parse_error("comparison data must be a 1-cochain");
  ustar.ensure_shape(n);
  TwoSequenceCocycle out;
  out.cocycle = coboundary(n, ustar);
  for (const Rat& v : coboundary_on(n, out.cocycle, virtual_simplices(n, 2)))
    if (!(ustar.coeffs.normalize(v) == Rat(0))) out.closed = false;
  if (!out.closed) throw std::logic_error("coboundary of a coboundary failed to vanish");
  return out;
}

struct FourCocycleReport {
  AbCochain cocycle;              // degree 3
  bool closed = true;             // on real and virtual 4-simplices
  bool trivial_class = true;      // always, being a coboundary; re-derived
  CohomologyResult h3;            // integral H^3 of the nerve for context
};

inline FourCocycleReport two_sequence_4cocycle(const Nerve& n, const AbCochain& cstar) {
  if (cstar.degree != 2) throw parse_error("gluing data must be a 2-cochain");
  cstar.ensure_shape(n);
  FourCocycleReport out;
  out.cocycle = coboundary(n, cstar);
  for (const Rat& v : coboundary_on(n, out.cocycle, virtual_simplices(n, 3)))
    if (!(cstar.coeffs.normalize(v) == Rat(0))) out.closed = false;
  if (!out.closed) throw std::logic_error("coboundary of a coboundary failed to vanish");

  if (n.count(3) > 0) {
    auto witness = are_cohomologous(n, AbCochain::zero(n, 3, cstar.coeffs), out.cocycle);
    out.trivial_class = witness.has_value();
    if (!out.trivial_class) throw std::logic_error("a coboundary classified as nontrivial");
  }
  out.h3 = cohomology(n, 3, Coefficients::Z());
  return out;
}

}  // namespace cocycle
