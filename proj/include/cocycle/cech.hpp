#pragma once

#include <optional>
#include <vector>

#include "cocycle/cochain.hpp"
#include "cocycle/group.hpp"
#include "cocycle/linalg.hpp"
#include "cocycle/smith.hpp"

namespace cocycle {

struct CohomologyResult {
  size_t betti = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order
};

namespace detail {

inline bool is_prime(const Int& m) {
  if (m < 2) return false;
  for (Int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// rank over F_p of an integer matrix, read off the Smith invariant factors
inline size_t rank_mod(const IntMat& m, const Int& p) {
  size_t r = 0;
  for (const Int& d : smith_invariants(smith_normal_form(m)))
    if (d % p != 0) ++r;
  return r;
}

}  // namespace detail

// H^k of the nerve with constant coefficients, via the Smith normal form of
// the two incidence matrices. Mod-m asks for prime m (F_p dimension count);
// composite moduli have no single dimension to report.
inline CohomologyResult cohomology(const Nerve& n, int k, const Coefficients& coeffs) {
  if (k < 0) throw parse_error("negative cohomological degree");
  if (coeffs.kind == CoeffKind::rationals_mod1)
    throw parse_error("cohomology over Q/Z is not supported; use Z or Z/p");
  if (coeffs.kind == CoeffKind::integers_mod && !detail::is_prime(coeffs.modulus))
    throw parse_error("mod-m cohomology needs a prime modulus, got " + coeffs.modulus.str());
  CohomologyResult out;
  if (n.count(k) == 0) return out;
  IntMat up = delta_matrix(n, k);                            // C^k -> C^{k+1}
  IntMat down = k > 0 ? delta_matrix(n, k - 1) : IntMat(0, n.count(k));  // C^{k-1} -> C^k

  switch (coeffs.kind) {
    case CoeffKind::integers: {
      out.betti = n.count(k) - rank(up) - rank(down);
      for (const Int& d : smith_invariants(smith_normal_form(down)))
        if (d > 1) out.torsion.push_back(d);
      return out;
    }
    case CoeffKind::rationals: {
      out.betti = n.count(k) - rank(up) - rank(down);
      return out;
    }
    case CoeffKind::integers_mod: {
      out.betti = n.count(k) - detail::rank_mod(up, coeffs.modulus) -
                  detail::rank_mod(down, coeffs.modulus);
      return out;
    }
    case CoeffKind::rationals_mod1:
      break;  // rejected above
  }
  throw std::logic_error("bad coefficient kind");
}

inline AbCochain twist_by_coboundary(const Nerve& n, const AbCochain& c, const AbCochain& b) {
  if (b.degree != c.degree - 1) throw parse_error("twist needs a cochain one degree down");
  return c + coboundary(n, b);
}

// Solves delta b = c' - c in the coefficient group; returns the witness b.
inline std::optional<AbCochain> are_cohomologous(const Nerve& n, const AbCochain& c,
                                                 const AbCochain& cprime) {
  c.ensure_shape(n);
  cprime.ensure_shape(n);
  if (c.degree != cprime.degree || !(c.coeffs == cprime.coeffs))
    throw parse_error("cochain shape mismatch");
  AbCochain diff = cprime - c;
  if (c.degree == 0)
    return is_zero(diff) ? std::optional<AbCochain>(AbCochain{-1, c.coeffs, {}}) : std::nullopt;

  IntMat a = delta_matrix(n, c.degree - 1);
  AbCochain witness = AbCochain::zero(n, c.degree - 1, c.coeffs);
  switch (c.coeffs.kind) {
    case CoeffKind::integers: {
      std::vector<Int> t;
      for (const Rat& v : diff.values) t.push_back(num(v));
      auto sol = solve_integer(a, t);
      if (!sol) return std::nullopt;
      for (size_t i = 0; i < sol->size(); ++i) witness.values[i] = Rat((*sol)[i]);
      return witness;
    }
    case CoeffKind::integers_mod: {
      std::vector<Int> t;
      for (const Rat& v : diff.values) t.push_back(num(v));
      auto sol = solve_mod(a, t, c.coeffs.modulus);
      if (!sol) return std::nullopt;
      for (size_t i = 0; i < sol->size(); ++i) witness.values[i] = Rat((*sol)[i]);
      return witness;
    }
    case CoeffKind::rationals: {
      auto sol = solve(to_rat(a), diff.values);
      if (!sol) return std::nullopt;
      witness.values = *sol;
      return witness;
    }
    case CoeffKind::rationals_mod1: {
      auto sol = solve_mod1(a, diff.values);
      if (!sol) return std::nullopt;
      for (size_t i = 0; i < sol->size(); ++i) witness.values[i] = mod1((*sol)[i]);
      return witness;
    }
  }
  throw std::logic_error("bad coefficient kind");
}

// coefficient-group homomorphism v -> scale * v into the target kind
inline AbCochain induced_abelian(const Nerve& n, const AbCochain& c, const Coefficients& target,
                                 const Rat& scale) {
  c.ensure_shape(n);
  AbCochain out;
  out.degree = c.degree;
  out.coeffs = target;
  for (const Rat& v : c.values) out.values.push_back(target.normalize(v * scale));
  return out;
}

// ----- group-valued cochains -----------------------------------------------

// one group element index per simplex, in nerve order
struct GroupCochain {
  int degree = 0;
  std::vector<int> values;

  static GroupCochain constant(const Nerve& n, int k, int element) {
    GroupCochain out;
    out.degree = k;
    out.values.assign(n.count(k), element);
    return out;
  }
};

inline void ensure_shape(const Nerve& n, const GroupCochain& c, const FiniteGroup& g) {
  if (c.values.size() != n.count(c.degree))
    throw parse_error("group cochain needs a value on every simplex of degree " +
                      std::to_string(c.degree));
  for (int v : c.values)
    if (v < 0 || v >= g.order()) throw parse_error("group cochain value out of range");
}

// per-edge automorphisms of the band
struct AutomorphismCochain {
  std::vector<std::vector<int>> maps;  // one elementwise map per 1-simplex

  static AutomorphismCochain trivial(const Nerve& n, const FiniteGroup& g) {
    AutomorphismCochain out;
    std::vector<int> ident(g.order());
    for (int i = 0; i < g.order(); ++i) ident[i] = i;
    out.maps.assign(n.count(1), ident);
    return out;
  }
};

struct NonabelianReport {
  bool ok = true;
  std::vector<std::vector<int>> cocycle_failures;  // 3-simplices where the law breaks
  std::vector<std::vector<int>> twist_failures;    // 2-simplices where the lambda law breaks
};

// Twisted 2-cocycle condition: on every tetrahedron (i,j,l,m)
//   lambda_ij(c_jlm) * c_ijm = c_ijl * c_ilm
// together with lambda_ij . lambda_jl = Ad(c_ijl) . lambda_il on triangles.
inline NonabelianReport nonabelian_2cocycle_check(const Nerve& n, const FiniteGroup& h,
                                                  const AutomorphismCochain& lambda,
                                                  const GroupCochain& c) {
  if (c.degree != 2) throw parse_error("classifying cochain must have degree 2");
  ensure_shape(n, c, h);
  if (lambda.maps.size() != n.count(1))
    throw parse_error("need one automorphism per edge");
  for (const auto& f : lambda.maps) {
    if (!is_group_homomorphism(f, h, h) || hom_image(f).size() != (size_t)h.order())
      throw check_error("edge map is not an automorphism of the band");
  }

  NonabelianReport report;
  auto edge = [&](int a, int b) { return lambda.maps[n.index_of({a, b})]; };
  auto cval = [&](int a, int b, int d) { return c.values[n.index_of({a, b, d})]; };

  for (const auto& tri : n.simplices(2)) {
    int i = tri[0], j = tri[1], l = tri[2];
    std::vector<int> lhs = compose_maps(edge(i, j), edge(j, l));
    std::vector<int> rhs = compose_maps(ad_map(h, cval(i, j, l)), edge(i, l));
    if (lhs != rhs) {
      report.ok = false;
      report.twist_failures.push_back(tri);
    }
  }
  for (const auto& tet : n.simplices(3)) {
    int i = tet[0], j = tet[1], l = tet[2], m = tet[3];
    int lhs = h.mul(edge(i, j)[cval(j, l, m)], cval(i, j, m));
    int rhs = h.mul(cval(i, j, l), cval(i, l, m));
    if (lhs != rhs) {
      report.ok = false;
      report.cocycle_failures.push_back(tet);
    }
  }
  return report;
}

inline GroupCochain induced_cocycle(const std::vector<int>& f, const FiniteGroup& src,
                                    const FiniteGroup& dst, const GroupCochain& c) {
  if (!is_group_homomorphism(f, src, dst))
    throw check_error("induced cocycle needs a group homomorphism");
  GroupCochain out;
  out.degree = c.degree;
  for (int v : c.values) {
    if (v < 0 || v >= src.order()) throw parse_error("group cochain value out of range");
    out.values.push_back(f[v]);
  }
  return out;
}

// ----- lifting obstruction --------------------------------------------------

// 1 -> H -> L' -> L -> 1 with a set-theoretic section of the projection
class GroupExtension {
 public:
  GroupExtension(FiniteGroup h, FiniteGroup lprime, FiniteGroup l, std::vector<int> inclusion,
                 std::vector<int> projection, std::vector<int> section)
      : h_(std::move(h)),
        lprime_(std::move(lprime)),
        l_(std::move(l)),
        inc_(std::move(inclusion)),
        proj_(std::move(projection)),
        sec_(std::move(section)) {
    if (!is_group_homomorphism(inc_, h_, lprime_))
      throw check_error("inclusion is not a homomorphism");
    if (!is_group_homomorphism(proj_, lprime_, l_))
      throw check_error("projection is not a homomorphism");
    if (hom_image(inc_).size() != (size_t)h_.order())
      throw check_error("inclusion is not injective");
    if (hom_image(proj_).size() != (size_t)l_.order())
      throw check_error("projection is not surjective");
    std::vector<int> composed = compose_maps(proj_, inc_);
    for (int v : composed)
      if (v != l_.id()) throw check_error("projection composed with inclusion is not trivial");
    if (hom_kernel(proj_, lprime_, l_) != hom_image(inc_))
      throw check_error("kernel of the projection is not the image of the band");
    if ((int)sec_.size() != l_.order()) throw parse_error("section needs a value per element");
    for (int x = 0; x < l_.order(); ++x) {
      if (sec_[x] < 0 || sec_[x] >= lprime_.order())
        throw parse_error("section value out of range");
      if (proj_[sec_[x]] != x) throw check_error("section does not split the projection");
    }
    // preimage table for pulling kernel elements back to H
    preimage_.assign(lprime_.order(), -1);
    for (int a = 0; a < h_.order(); ++a) preimage_[inc_[a]] = a;
    central_ = true;
    for (int a = 0; a < h_.order() && central_; ++a)
      for (int x = 0; x < lprime_.order() && central_; ++x)
        if (lprime_.mul(inc_[a], x) != lprime_.mul(x, inc_[a])) central_ = false;
  }

  const FiniteGroup& band() const { return h_; }
  const FiniteGroup& total() const { return lprime_; }
  const FiniteGroup& base() const { return l_; }
  int include(int a) const { return inc_[a]; }
  int project(int x) const { return proj_[x]; }
  int section(int x) const { return sec_[x]; }
  bool central() const { return central_; }

  // H-index of a total-group element lying in the kernel
  int pull_back(int x) const {
    if (preimage_[x] < 0) throw check_error("element is not in the image of the band");
    return preimage_[x];
  }

  // conjugation by a total-group element, restricted to the band
  std::vector<int> ad_on_band(int x) const {
    std::vector<int> f(h_.order());
    for (int a = 0; a < h_.order(); ++a) f[a] = pull_back(lprime_.conjugate(x, inc_[a]));
    return f;
  }

  GroupExtension with_section(std::vector<int> section) const {
    return GroupExtension(h_, lprime_, l_, inc_, proj_, std::move(section));
  }

 private:
  FiniteGroup h_, lprime_, l_;
  std::vector<int> inc_, proj_, sec_;
  std::vector<int> preimage_;
  bool central_ = false;
};

struct LiftingObstruction {
  GroupCochain c;             // band-valued 2-cochain
  AutomorphismCochain lambda; // Ad(section(u_ij)) on the band
  bool central = false;
};

// c_ijl = s(u_ij) s(u_jl) s(u_il)^{-1}, pulled back to the band. The input u
// must compose strictly: u_ij u_jl = u_il on every triangle.
inline LiftingObstruction lifting_obstruction(const GroupExtension& ext, const Nerve& n,
                                              const GroupCochain& u,
                                              bool require_central = false) {
  if (u.degree != 1) throw parse_error("transition data must be a 1-cochain");
  ensure_shape(n, u, ext.base());
  if (require_central && !ext.central())
    throw check_error("band is not central in the extension");

  const FiniteGroup& l = ext.base();
  const FiniteGroup& lp = ext.total();
  auto uval = [&](int a, int b) { return u.values[n.index_of({a, b})]; };
  for (const auto& tri : n.simplices(2)) {
    int i = tri[0], j = tri[1], k = tri[2];
    if (l.mul(uval(i, j), uval(j, k)) != uval(i, k))
      throw check_error("transition data is not a strict cocycle on triangle (" +
                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                        ")");
  }

  LiftingObstruction out;
  out.central = ext.central();
  out.c.degree = 2;
  for (const auto& tri : n.simplices(2)) {
    int i = tri[0], j = tri[1], k = tri[2];
    int w = lp.mul(lp.mul(ext.section(uval(i, j)), ext.section(uval(j, k))),
                   lp.inv(ext.section(uval(i, k))));
    out.c.values.push_back(ext.pull_back(w));
  }
  out.lambda.maps.reserve(n.count(1));
  for (const auto& e : n.simplices(1))
    out.lambda.maps.push_back(ext.ad_on_band(ext.section(u.values[n.index_of(e)])));
  return out;
}

}  // namespace cocycle
