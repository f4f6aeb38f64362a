#pragma once

#include <string>
#include <vector>

#include "cocycle/combinatorics.hpp"
#include "cocycle/linalg.hpp"
#include "cocycle/matrix.hpp"
#include "cocycle/rational.hpp"

namespace cocycle {

/// A finite-dimensional Lie algebra over Q, presented by rational structure
/// constants [e_i, e_j] = sum_k c_ij^k e_k.  The full antisymmetric table is
/// stored; construction from the i<j half fills in the rest.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  LieAlgebra(int dim, std::vector<std::string> basis) : dim_(dim), basis_(std::move(basis)) {
    if ((int)basis_.size() != dim) throw parse_error("basis name count != dim");
    c_.assign(dim, std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim, Rat(0))));
  }

  static LieAlgebra abelian(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(dim, names);
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& basis() const { return basis_; }

  void set_bracket(int i, int j, const std::vector<Rat>& coeffs) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || (int)coeffs.size() != dim_)
      throw parse_error("bracket index out of range");
    if (i == j) throw parse_error("bracket [e_i,e_i] must not be specified");
    for (int k = 0; k < dim_; ++k) {
      c_[i][j][k] = coeffs[k];
      c_[j][i][k] = -coeffs[k];
    }
  }

  const std::vector<Rat>& bracket(int i, int j) const { return c_[i][j]; }

  std::vector<Rat> bracket_vec(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    std::vector<Rat> out(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j] == 0 || i == j) continue;
        Rat f = x[i] * y[j];
        for (int k = 0; k < dim_; ++k)
          if (c_[i][j][k] != 0) out[k] += f * c_[i][j][k];
      }
    }
    return out;
  }

 private:
  int dim_ = 0;
  std::vector<std::string> basis_;
  std::vector<std::vector<std::vector<Rat>>> c_;
};

struct JacobiViolation {
  int i, j, k;
  std::vector<Rat> defect;  // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

struct LieValidation {
  bool jacobi_ok = true;
  std::vector<JacobiViolation> violations;
  bool integral = true;      // all structure constants in Z
  bool nilpotent = false;
  int nilpotency_class = 0;  // meaningful only when nilpotent
};

namespace detail {

// dimension of the span of a set of vectors
inline size_t span_dim(const std::vector<std::vector<Rat>>& vs, int dim) {
  if (vs.empty()) return 0;
  RatMat m(vs.size(), dim);
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = vs[i][j];
  return rank(m);
}

// spanning vectors of [g, span(vs)]
inline std::vector<std::vector<Rat>> bracket_span(const LieAlgebra& L,
                                                  const std::vector<std::vector<Rat>>& vs) {
  std::vector<std::vector<Rat>> out;
  for (int i = 0; i < L.dim(); ++i) {
    std::vector<Rat> ei(L.dim(), Rat(0));
    ei[i] = 1;
    for (const auto& v : vs) out.push_back(L.bracket_vec(ei, v));
  }
  return out;
}

}  // namespace detail

inline LieValidation validate(const LieAlgebra& L) {
  LieValidation rep;
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const Rat& c : L.bracket(i, j))
        if (!is_integer(c)) rep.integral = false;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rat> ei(n, Rat(0)), ej(n, Rat(0)), ek(n, Rat(0));
        ei[i] = ej[j] = ek[k] = 1;
        std::vector<Rat> d = L.bracket_vec(L.bracket(i, j), ek);
        std::vector<Rat> d2 = L.bracket_vec(L.bracket(j, k), ei);
        std::vector<Rat> d3 = L.bracket_vec(L.bracket(k, i), ej);
        bool bad = false;
        for (int m = 0; m < n; ++m) {
          d[m] += d2[m] + d3[m];
          if (d[m] != 0) bad = true;
        }
        if (bad) {
          rep.jacobi_ok = false;
          rep.violations.push_back({i, j, k, d});
        }
      }

  // lower central series g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...
  std::vector<std::vector<Rat>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> ei(n, Rat(0));
    ei[i] = 1;
    layer.push_back(ei);
  }
  size_t prev = n;
  for (int step = 1; step <= n + 1; ++step) {
    layer = detail::bracket_span(L, layer);
    size_t d = detail::span_dim(layer, n);
    if (d == 0) {
      rep.nilpotent = true;
      rep.nilpotency_class = step;
      break;
    }
    if (d == prev) break;  // stabilized above zero: not nilpotent
    prev = d;
  }
  return rep;
}

/// Matrix of the Chevalley–Eilenberg differential d : Λ^k g* → Λ^{k+1} g*
/// in the lexicographic wedge bases, with dξ(x,y) = −ξ([x,y]) in degree 1.
inline RatMat ce_differential(const LieAlgebra& L, int k) {
  const int n = L.dim();
  if (k < 0 || k > n) throw parse_error("ce_differential: k out of range");
  CombIndex rows_ix(n, k + 1), cols_ix(n, k);
  RatMat d(rows_ix.size(), cols_ix.size());
  std::vector<int> rest, merged;
  for (size_t r = 0; r < rows_ix.size(); ++r) {
    const auto& t = rows_ix.tuple(r);
    for (size_t p = 0; p < t.size(); ++p)
      for (size_t q = p + 1; q < t.size(); ++q) {
        // dξ(x_0..x_k) = Σ_{p<q} (−1)^{p+q} ξ([x_p,x_q], rest); in degree 1
        // this is exactly dξ(x,y) = −ξ([x,y]).
        int sign_pq = ((p + q) % 2 == 0) ? 1 : -1;
        rest.clear();
        for (size_t s = 0; s < t.size(); ++s)
          if (s != p && s != q) rest.push_back(t[s]);
        const std::vector<Rat>& w = L.bracket(t[p], t[q]);
        for (int m = 0; m < n; ++m) {
          if (w[m] == 0) continue;
          int ms = merge_sign(m, rest, merged);
          if (ms == 0) continue;
          long col = cols_ix.index(merged);
          d(r, col) += Rat(sign_pq * ms) * w[m];
        }
      }
  }
  return d;
}

inline size_t betti(const LieAlgebra& L, int k) {
  const int n = L.dim();
  if (k < 0 || k > n) throw parse_error("betti: k out of range");
  RatMat dk = ce_differential(L, k);
  size_t ker = dk.cols() - rank(dk);
  size_t im = (k == 0) ? 0 : rank(ce_differential(L, k - 1));
  return ker - im;
}

inline std::vector<size_t> betti_sequence(const LieAlgebra& L) {
  std::vector<size_t> b;
  std::vector<size_t> ranks(L.dim() + 1, 0);
  for (int k = 0; k <= L.dim(); ++k) ranks[k] = rank(ce_differential(L, k));
  for (int k = 0; k <= L.dim(); ++k) {
    size_t ker = binomial(L.dim(), k) - ranks[k];
    b.push_back(ker - (k == 0 ? 0 : ranks[k - 1]));
  }
  return b;
}

}  // namespace cocycle
