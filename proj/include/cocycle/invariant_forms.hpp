#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cocycle/lie_algebra.hpp"

namespace cocycle {

struct BilinearForm {
  int dim = 0;
  RatMat gram;
};

/// Constant-coefficient alternating form on a Lie algebra, valued in Q^value_dim
/// (value_dim 1 for scalar forms, dim(H) for H-valued connection data).
/// Components are stored on the lexicographic increasing-tuple wedge basis;
/// evaluation on other tuples is by the alternating convention.
struct InvariantForm {
  int degree = 0;
  int algebra_dim = 0;
  int value_dim = 1;
  std::vector<std::vector<Rat>> comps;  // indexed like combinations(algebra_dim, degree)

  static InvariantForm zero(int degree, int algebra_dim, int value_dim) {
    InvariantForm f;
    f.degree = degree;
    f.algebra_dim = algebra_dim;
    f.value_dim = value_dim;
    f.comps.assign(binomial(algebra_dim, degree), std::vector<Rat>(value_dim, Rat(0)));
    return f;
  }

  bool is_zero() const {
    for (const auto& c : comps)
      for (const auto& v : c)
        if (v != 0) return false;
    return true;
  }

  bool same_shape(const InvariantForm& o) const {
    return degree == o.degree && algebra_dim == o.algebra_dim && value_dim == o.value_dim;
  }

  InvariantForm operator+(const InvariantForm& o) const {
    if (!same_shape(o)) throw check_error("form shape mismatch");
    InvariantForm s = *this;
    for (size_t i = 0; i < comps.size(); ++i)
      for (int a = 0; a < value_dim; ++a) s.comps[i][a] += o.comps[i][a];
    return s;
  }

  InvariantForm operator-(const InvariantForm& o) const {
    if (!same_shape(o)) throw check_error("form shape mismatch");
    InvariantForm s = *this;
    for (size_t i = 0; i < comps.size(); ++i)
      for (int a = 0; a < value_dim; ++a) s.comps[i][a] -= o.comps[i][a];
    return s;
  }

  InvariantForm operator*(const Rat& t) const {
    InvariantForm s = *this;
    for (auto& c : s.comps)
      for (auto& v : c) v *= t;
    return s;
  }

  bool operator==(const InvariantForm& o) const {
    return same_shape(o) && comps == o.comps;
  }

  /// Value on an arbitrary index tuple (alternating extension).
  std::vector<Rat> value_at(std::vector<int> tuple) const {
    CombIndex ix(algebra_dim, degree);
    int sign = sort_sign(tuple);
    if (sign == 0) return std::vector<Rat>(value_dim, Rat(0));
    long pos = ix.index(tuple);
    if (pos < 0) throw parse_error("form index out of range");
    std::vector<Rat> v = comps[pos];
    if (sign < 0)
      for (auto& x : v) x = -x;
    return v;
  }
};

inline bool is_symmetric(const BilinearForm& b) { return b.gram.is_symmetric(); }

/// B([x,y],z) + B(y,[x,z]) = 0 on all basis triples.
inline bool is_ad_invariant(const LieAlgebra& L, const BilinearForm& b) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rat acc(0);
        const auto& cij = L.bracket(i, j);
        const auto& cik = L.bracket(i, k);
        for (int m = 0; m < n; ++m) {
          if (cij[m] != 0) acc += cij[m] * b.gram(m, k);
          if (cik[m] != 0) acc += cik[m] * b.gram(j, m);
        }
        if (acc != 0) return false;
      }
  return true;
}

struct AnnotatedForm {
  BilinearForm form;
  size_t rank = 0;
  bool degenerate = true;
};

/// Basis of the space of ad-invariant symmetric bilinear forms, one annotated
/// entry per kernel vector of the assembled constraint system.
inline std::vector<AnnotatedForm> invariant_symmetric_forms(const LieAlgebra& L) {
  const int n = L.dim();
  // unknowns: B_ab for a <= b
  std::vector<std::pair<int, int>> vars;
  std::vector<std::vector<int>> var_of(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      var_of[a][b] = var_of[b][a] = (int)vars.size();
      vars.push_back({a, b});
    }

  RatMat sys(n * n * n, vars.size());
  size_t row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k, ++row) {
        const auto& cij = L.bracket(i, j);
        const auto& cik = L.bracket(i, k);
        for (int m = 0; m < n; ++m) {
          if (cij[m] != 0) sys(row, var_of[m][k]) += cij[m];
          if (cik[m] != 0) sys(row, var_of[j][m]) += cik[m];
        }
      }

  std::vector<AnnotatedForm> out;
  for (const auto& v : kernel_basis(sys)) {
    AnnotatedForm af;
    af.form.dim = n;
    af.form.gram = RatMat(n, n);
    for (size_t t = 0; t < vars.size(); ++t) {
      auto [a, b] = vars[t];
      af.form.gram(a, b) = v[t];
      af.form.gram(b, a) = v[t];
    }
    af.rank = rank(af.form.gram);
    af.degenerate = af.rank < (size_t)n;
    out.push_back(std::move(af));
  }
  return out;
}

/// Deterministic greedy search for a high-rank element of the span of the
/// returned basis.  The result is a witness (a concrete invariant form of the
/// reported rank), not a certified maximum.
inline AnnotatedForm max_rank_witness(const std::vector<AnnotatedForm>& basis) {
  AnnotatedForm best;
  if (basis.empty()) return best;
  const int n = basis[0].form.dim;
  RatMat acc(n, n);
  size_t cur = 0;
  const long weights[] = {1, -1, 2, -2, 3, -3};
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& bf : basis)
      for (long w : weights) {
        RatMat cand = acc + bf.form.gram * Rat(w);
        size_t r = rank(cand);
        if (r > cur) {
          acc = cand;
          cur = r;
          break;
        }
      }
  best.form.dim = n;
  best.form.gram = acc;
  best.rank = cur;
  best.degenerate = cur < (size_t)n;
  return best;
}

struct NuFormResult {
  InvariantForm nu;          // degree 3, scalar-valued
  bool antisymmetric = true; // full antisymmetry of B([x,y],z); true iff B ad-invariant enough
  bool closed = true;        // d(nu) = 0 in the CE complex
  std::vector<std::array<int, 3>> antisym_failures;
};

/// The canonical trilinear form ν(x,y,z) = B([x,y],z).
inline NuFormResult nu_form(const LieAlgebra& L, const BilinearForm& b) {
  if (!is_symmetric(b)) throw check_error("nu_form: B is not symmetric");
  if (b.dim != L.dim()) throw check_error("nu_form: dimension mismatch");
  const int n = L.dim();
  auto t_val = [&](int i, int j, int k) {
    Rat acc(0);
    const auto& cij = L.bracket(i, j);
    for (int m = 0; m < n; ++m)
      if (cij[m] != 0) acc += cij[m] * b.gram(m, k);
    return acc;
  };

  NuFormResult res;
  res.nu = InvariantForm::zero(3, n, 1);
  CombIndex ix(n, 3);
  for (size_t t = 0; t < ix.size(); ++t) {
    const auto& s = ix.tuple(t);
    res.nu.comps[t][0] = t_val(s[0], s[1], s[2]);
  }
  // full antisymmetry: T(i,j,k) must equal sign * T(sorted) for every triple
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<int> tup{i, j, k};
        int sign = sort_sign(tup);
        Rat expected = (sign == 0) ? Rat(0) : Rat(sign) * t_val(tup[0], tup[1], tup[2]);
        if (t_val(i, j, k) != expected) {
          res.antisymmetric = false;
          res.antisym_failures.push_back({i, j, k});
        }
      }
  RatMat d3 = ce_differential(L, 3);
  std::vector<Rat> nu_vec(ix.size());
  for (size_t t = 0; t < ix.size(); ++t) nu_vec[t] = res.nu.comps[t][0];
  for (const Rat& x : d3.apply(nu_vec))
    if (x != 0) res.closed = false;
  return res;
}

/// Is `b` in the span of the basis?  (Exact rank comparison.)
inline bool in_span(const std::vector<AnnotatedForm>& basis, const BilinearForm& b) {
  if (basis.empty()) return b.gram.is_zero();
  const int n = b.dim;
  const size_t vars = (size_t)n * n;
  RatMat base(basis.size(), vars), stacked(basis.size() + 1, vars);
  for (size_t r = 0; r < basis.size(); ++r)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        base(r, (size_t)i * n + j) = stacked(r, (size_t)i * n + j) = basis[r].form.gram(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) stacked(basis.size(), (size_t)i * n + j) = b.gram(i, j);
  return rank(stacked) == rank(base);
}

}  // namespace cocycle
