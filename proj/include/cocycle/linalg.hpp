#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cocycle/matrix.hpp"
#include "cocycle/rational.hpp"

namespace cocycle {

struct Echelon {
  IntMat mat;
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
  int swap_sign = 1;
};

/// Fraction-free (Bareiss) row echelon form of an integer matrix.  Every
/// intermediate entry is a minor of the input, so divisions are exact and
/// coefficient growth stays polynomial.
inline Echelon bareiss_echelon(IntMat a) {
  Echelon e;
  const size_t rows = a.rows(), cols = a.cols();
  size_t r = 0;
  Int prev = 1;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r) {
      a.swap_rows(piv, r);
      e.swap_sign = -e.swap_sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(r, col);
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.mat = std::move(a);
  e.rank = r;
  return e;
}

/// Clears denominators row by row; preserves rank and right kernel.
inline IntMat integerize_rows(const RatMat& m) {
  IntMat out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, den(m(i, j)));
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = num(m(i, j)) * (l / den(m(i, j)));
  }
  return out;
}

inline size_t rank(const RatMat& m) { return bareiss_echelon(integerize_rows(m)).rank; }
inline size_t rank(const IntMat& m) { return bareiss_echelon(m).rank; }

/// Basis of the right kernel, one primitive integer vector per free column.
/// Count is always cols − rank.
inline std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
  const size_t cols = m.cols();
  Echelon e = bareiss_echelon(integerize_rows(m));
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : e.pivot_cols) is_pivot[p] = true;

  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (size_t ri = e.pivot_cols.size(); ri-- > 0;) {
      size_t p = e.pivot_cols[ri];
      Rat s(0);
      for (size_t j = p + 1; j < cols; ++j)
        if (e.mat(ri, j) != 0) s += Rat(e.mat(ri, j)) * v[j];
      v[p] = -s / Rat(e.mat(ri, p));
    }
    // scale to a primitive integer vector with positive leading entry
    Int l = 1;
    for (const Rat& x : v) l = boost::multiprecision::lcm(l, den(x));
    Int g = 0;
    std::vector<Int> w(cols);
    for (size_t j = 0; j < cols; ++j) {
      w[j] = num(v[j]) * (l / den(v[j]));
      g = boost::multiprecision::gcd(g, w[j]);
    }
    if (g == 0) g = 1;
    Int lead = 0;
    for (size_t j = 0; j < cols; ++j)
      if (w[j] != 0) {
        lead = w[j];
        break;
      }
    if (lead < 0) g = -g;
    for (size_t j = 0; j < cols; ++j) v[j] = Rat(w[j] / g);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Int det(const IntMat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Echelon e = bareiss_echelon(m);
  if (e.rank < m.rows()) return 0;
  // for a nonsingular matrix the last Bareiss pivot is det up to swap sign
  return Int(e.swap_sign) * e.mat(m.rows() - 1, m.cols() - 1);
}

inline Rat det(const RatMat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Rat(1);
  Rat scale(1);
  IntMat a(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, den(m(i, j)));
    scale *= Rat(l);
    for (size_t j = 0; j < m.cols(); ++j) a(i, j) = num(m(i, j)) * (l / den(m(i, j)));
  }
  return Rat(det(a)) / scale;
}

/// In-place reduced row echelon form over Q; returns pivot columns.
inline std::vector<size_t> rref(RatMat& a) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    size_t piv = a.rows();
    for (size_t i = r; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    Rat p = a(r, col);
    for (size_t j = 0; j < a.cols(); ++j) a(r, j) /= p;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

/// One solution of A·x = b (free variables set to 0), or nullopt.
inline std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

inline RatMat inverse(const RatMat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw std::invalid_argument("matrix is singular");
  RatMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Solves K·X = B where every column of B lies in the column space of K and
/// K has full column rank.  Used to restrict a linear map to a subspace
/// expressed in a kernel basis.
inline RatMat solve_in_basis(const RatMat& k, const RatMat& b) {
  if (k.rows() != b.rows()) throw std::invalid_argument("solve_in_basis: shape mismatch");
  RatMat aug(k.rows(), k.cols() + b.cols());
  for (size_t i = 0; i < k.rows(); ++i) {
    for (size_t j = 0; j < k.cols(); ++j) aug(i, j) = k(i, j);
    for (size_t j = 0; j < b.cols(); ++j) aug(i, k.cols() + j) = b(i, j);
  }
  auto pivots = rref(aug);
  size_t r = 0;
  for (size_t p : pivots)
    if (p < k.cols()) ++r;
  if (r != k.cols()) throw std::logic_error("solve_in_basis: basis not independent");
  for (size_t i = r; i < aug.rows(); ++i)
    for (size_t j = k.cols(); j < aug.cols(); ++j)
      if (aug(i, j) != 0) throw std::logic_error("solve_in_basis: inconsistent system");
  RatMat x(k.cols(), b.cols());
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, k.cols() + j);
  return x;
}

inline RatMat basis_to_matrix(const std::vector<std::vector<Rat>>& vs, size_t dim) {
  RatMat m(dim, vs.size());
  for (size_t j = 0; j < vs.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m(i, j) = vs[j][i];
  return m;
}

}  // namespace cocycle
