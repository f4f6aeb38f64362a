#pragma once

#include "cocycle/invariant_forms.hpp"
#include "cocycle/lie_algebra.hpp"

namespace cocycle {

/// Componentwise CE differential of an H-valued constant form on the base
/// algebra L.  (Trivial action on the value space.)
inline InvariantForm form_d(const LieAlgebra& base, const InvariantForm& f) {
  if (f.algebra_dim != base.dim()) throw check_error("form_d: base dimension mismatch");
  RatMat d = ce_differential(base, f.degree);
  InvariantForm out = InvariantForm::zero(f.degree + 1, f.algebra_dim, f.value_dim);
  for (size_t r = 0; r < d.rows(); ++r)
    for (size_t c = 0; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      for (int a = 0; a < f.value_dim; ++a) out.comps[r][a] += d(r, c) * f.comps[c][a];
    }
  return out;
}

/// Graded bracket of two H-valued 1-forms:
/// [a,b](x,y) = [a(x), b(y)] − [a(y), b(x)].  In particular [θ,θ](x,y) =
/// 2[θ(x),θ(y)], so curvature uses ½[θ,θ].
inline InvariantForm form_bracket(const LieAlgebra& values, const InvariantForm& a,
                                  const InvariantForm& b) {
  if (a.degree != 1 || b.degree != 1)
    throw check_error("form_bracket: only degree-1 forms are supported");
  if (a.algebra_dim != b.algebra_dim || a.value_dim != b.value_dim)
    throw check_error("form_bracket: shape mismatch");
  if (a.value_dim != values.dim())
    throw check_error("form_bracket: value algebra dimension mismatch");
  const int n = a.algebra_dim;
  InvariantForm out = InvariantForm::zero(2, n, a.value_dim);
  CombIndex pairs(n, 2);
  for (size_t t = 0; t < pairs.size(); ++t) {
    int x = pairs.tuple(t)[0], y = pairs.tuple(t)[1];
    auto v1 = values.bracket_vec(a.comps[x], b.comps[y]);
    auto v2 = values.bracket_vec(a.comps[y], b.comps[x]);
    for (int m = 0; m < a.value_dim; ++m) out.comps[t][m] = v1[m] - v2[m];
  }
  return out;
}

/// Ω = dθ + ½[θ,θ] for an H-valued 1-form θ on L.
inline InvariantForm curvature(const LieAlgebra& base, const LieAlgebra& values,
                               const InvariantForm& theta) {
  if (theta.degree != 1) throw check_error("curvature: theta must have degree 1");
  if (theta.value_dim != values.dim())
    throw check_error("curvature: value dimension mismatch with the value algebra");
  InvariantForm d = form_d(base, theta);
  InvariantForm br = form_bracket(values, theta, theta);
  return d + br * make_rat(1, 2);
}

/// Curving difference L(θ) − L(α) = curvature(θ) − curvature(α).
inline InvariantForm curving(const LieAlgebra& base, const LieAlgebra& values,
                             const InvariantForm& theta, const InvariantForm& alpha) {
  if (!theta.same_shape(alpha)) throw check_error("curving: theta/alpha shape mismatch");
  return curvature(base, values, theta) - curvature(base, values, alpha);
}

/// The transformation law defect
///   curvature(θ+α) − curvature(θ) − dα − ½([α,α]+[θ,α]+[α,θ]);
/// identically zero for any bilinear bracket, and checked as such.
inline InvariantForm curving_transformation_defect(const LieAlgebra& base,
                                                   const LieAlgebra& values,
                                                   const InvariantForm& theta,
                                                   const InvariantForm& alpha) {
  InvariantForm lhs = curvature(base, values, theta + alpha) - curvature(base, values, theta);
  InvariantForm rhs = form_d(base, alpha) +
                      (form_bracket(values, alpha, alpha) + form_bracket(values, theta, alpha) +
                       form_bracket(values, alpha, theta)) *
                          make_rat(1, 2);
  return lhs - rhs;
}

/// Checks f([x,y]) = [f(x), f(y)] on all basis pairs.
inline bool is_lie_morphism(const RatMat& f, const LieAlgebra& src, const LieAlgebra& dst) {
  if ((int)f.cols() != src.dim() || (int)f.rows() != dst.dim()) return false;
  for (int i = 0; i < src.dim(); ++i)
    for (int j = i + 1; j < src.dim(); ++j) {
      std::vector<Rat> lhs = f.apply(src.bracket(i, j));
      std::vector<Rat> rhs = dst.bracket_vec(f.col(i), f.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

/// Applies a verified Lie algebra morphism componentwise to a form's values.
inline InvariantForm pushforward_form(const RatMat& f, const LieAlgebra& src,
                                      const LieAlgebra& dst, const InvariantForm& theta) {
  if (theta.value_dim != src.dim())
    throw check_error("pushforward_form: form not valued in the source algebra");
  if (!is_lie_morphism(f, src, dst))
    throw check_error("pushforward_form: f is not a Lie algebra morphism");
  InvariantForm out = InvariantForm::zero(theta.degree, theta.algebra_dim, dst.dim());
  for (size_t t = 0; t < theta.comps.size(); ++t) out.comps[t] = f.apply(theta.comps[t]);
  return out;
}

/// gl_k with basis E_11, E_12, ..., E_kk (row-major), [E_ab, E_cd] =
/// δ_bc E_ad − δ_da E_cb.
inline LieAlgebra gl_algebra(int k) {
  const int n = k * k;
  std::vector<std::string> names;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  LieAlgebra L(n, names);
  auto idx = [k](int a, int b) { return a * k + b; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int a = i / k, b = i % k, c = j / k, d = j % k;
      std::vector<Rat> v(n, Rat(0));
      if (b == c) v[idx(a, d)] += 1;
      if (d == a) v[idx(c, b)] -= 1;
      bool nonzero = false;
      for (const auto& x : v)
        if (x != 0) nonzero = true;
      if (nonzero) L.set_bracket(i, j, v);
    }
  return L;
}

/// trace : gl_k → (abelian 1-dim), as a 1×k² matrix; a Lie morphism since
/// traces of brackets vanish.
inline RatMat trace_map(int k) {
  RatMat f(1, k * k);
  for (int a = 0; a < k; ++a) f(0, a * k + a) = 1;
  return f;
}

}  // namespace cocycle
