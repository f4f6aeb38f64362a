#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cocycle/linalg.hpp"
#include "cocycle/matrix.hpp"
#include "cocycle/rational.hpp"

namespace cocycle {

struct SmithResult {
  IntMat u, d, v;  // u * input * v == d
};

namespace detail {

inline bool find_pivot(const IntMat& a, size_t t, size_t& pi, size_t& pj) {
  // minimal nonzero absolute value; ties by lowest row, then lowest column
  bool found = false;
  Int best = 0;
  for (size_t i = t; i < a.rows(); ++i)
    for (size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace detail

/// Smith normal form with the invariant U·m·V = D maintained throughout and
/// re-verified (together with |det U| = |det V| = 1) before returning.
inline SmithResult smith_normal_form(const IntMat& m) {
  const size_t rows = m.rows(), cols = m.cols();
  IntMat a = m;
  IntMat u = IntMat::identity(rows);
  IntMat v = IntMat::identity(cols);

  size_t limit = std::min(rows, cols);
  for (size_t t = 0; t < limit; ++t) {
    for (;;) {
      size_t pi = 0, pj = 0;
      if (!detail::find_pivot(a, t, pi, pj)) {
        t = limit;  // rest of the matrix is zero
        break;
      }
      if (pi != t) {
        a.swap_rows(pi, t);
        u.swap_rows(pi, t);
      }
      if (pj != t) {
        a.swap_cols(pj, t);
        v.swap_cols(pj, t);
      }
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);  // truncated; remainder is smaller than pivot
        if (q != 0)
          for (size_t j = 0; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (q != 0)
          for (size_t j = 0; j < rows; ++j) u(i, j) -= q * u(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0)
          for (size_t i = 0; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (q != 0)
          for (size_t i = 0; i < cols; ++i) v(i, j) -= q * v(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders left; repick a smaller pivot
      // enforce the divisibility chain: fold a bad row into row t and redo
      bool divides_all = true;
      for (size_t i = t + 1; i < rows && divides_all; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (size_t jj = 0; jj < cols; ++jj) a(t, jj) += a(i, jj);
            for (size_t jj = 0; jj < rows; ++jj) u(t, jj) += u(i, jj);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (t >= limit) break;
    if (a(t, t) < 0) {
      for (size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithResult r{std::move(u), std::move(a), std::move(v)};
  if (r.u * m * r.v != r.d) throw std::logic_error("smith_normal_form: U*m*V != D");
  Int du = det(r.u), dv = det(r.v);
  if (du * du != 1 || dv * dv != 1)
    throw std::logic_error("smith_normal_form: transform not unimodular");
  for (size_t t = 0; t + 1 < std::min(rows, cols); ++t) {
    if (r.d(t, t) < 0 || (r.d(t, t) != 0 && r.d(t + 1, t + 1) % r.d(t, t) != 0))
      throw std::logic_error("smith_normal_form: divisibility chain broken");
    if (r.d(t, t) == 0 && r.d(t + 1, t + 1) != 0)
      throw std::logic_error("smith_normal_form: zero before nonzero invariant");
  }
  return r;
}

inline std::vector<Int> smith_invariants(const SmithResult& s) {
  std::vector<Int> d;
  for (size_t t = 0; t < std::min(s.d.rows(), s.d.cols()); ++t) d.push_back(s.d(t, t));
  return d;
}

struct CokernelInvariants {
  size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
};

/// Invariant factors of coker(m : Z^cols -> Z^rows).
inline CokernelInvariants cokernel_invariants(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  CokernelInvariants out;
  size_t r = 0;
  for (const Int& d : smith_invariants(s)) {
    if (d != 0) ++r;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = m.rows() - r;
  return out;
}

// ---- SNF-based linear solvers ------------------------------------------

namespace detail {

inline Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return abs(a);
  }
  Int x1, y1;
  Int g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline Int mod_norm(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace detail

/// A·y = t over the integers; one solution (free coordinates 0) or nullopt.
inline std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& t) {
  if (t.size() != a.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
  SmithResult s = smith_normal_form(a);
  std::vector<Int> ut(a.rows(), 0);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.rows(); ++j) ut[i] += s.u(i, j) * t[j];
  auto diag = smith_invariants(s);
  std::vector<Int> z(a.cols(), 0);
  for (size_t i = 0; i < a.rows(); ++i) {
    Int d = (i < diag.size()) ? diag[i] : Int(0);
    if (d == 0) {
      if (ut[i] != 0) return std::nullopt;
    } else {
      if (ut[i] % d != 0) return std::nullopt;
      z[i] = ut[i] / d;
    }
  }
  std::vector<Int> y(a.cols(), 0);
  for (size_t i = 0; i < a.cols(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) y[i] += s.v(i, j) * z[j];
  return y;
}

/// A·y ≡ t (mod modulus); entries of the solution normalized to [0, modulus).
inline std::optional<std::vector<Int>> solve_mod(const IntMat& a, const std::vector<Int>& t,
                                                 const Int& modulus) {
  if (modulus <= 0) throw std::invalid_argument("solve_mod: modulus must be positive");
  if (t.size() != a.rows()) throw std::invalid_argument("solve_mod: shape mismatch");
  SmithResult s = smith_normal_form(a);
  std::vector<Int> ut(a.rows(), 0);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.rows(); ++j) ut[i] += s.u(i, j) * t[j];
  auto diag = smith_invariants(s);
  std::vector<Int> z(a.cols(), 0);
  for (size_t i = 0; i < a.rows(); ++i) {
    Int d = (i < diag.size()) ? diag[i] : Int(0);
    Int g = boost::multiprecision::gcd(d, modulus);  // >= 1 (gcd(0,m) = m)
    if (detail::mod_norm(ut[i], modulus) % g != 0) return std::nullopt;
    if (d != 0) {
      // d·z ≡ ut (mod m): divide through by g, then invert d/g mod m/g
      Int m2 = modulus / g;
      Int x, y;
      detail::egcd(d / g, m2, x, y);
      z[i] = detail::mod_norm((ut[i] / g) * x, m2);
    }
  }
  std::vector<Int> y(a.cols(), 0);
  for (size_t i = 0; i < a.cols(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) y[i] += s.v(i, j) * z[j];
    y[i] = detail::mod_norm(y[i], modulus);
  }
  return y;
}

/// A·y ≡ t (mod Z) with y rational; solution coordinates in [0,1).
inline std::optional<std::vector<Rat>> solve_mod1(const IntMat& a, const std::vector<Rat>& t) {
  if (t.size() != a.rows()) throw std::invalid_argument("solve_mod1: shape mismatch");
  SmithResult s = smith_normal_form(a);
  std::vector<Rat> ut(a.rows(), Rat(0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.rows(); ++j)
      if (s.u(i, j) != 0) ut[i] += Rat(s.u(i, j)) * t[j];
  auto diag = smith_invariants(s);
  std::vector<Rat> z(a.cols(), Rat(0));
  for (size_t i = 0; i < a.rows(); ++i) {
    Int d = (i < diag.size()) ? diag[i] : Int(0);
    if (d == 0) {
      if (!is_integer(ut[i])) return std::nullopt;
    } else {
      z[i] = ut[i] / Rat(d);
    }
  }
  std::vector<Rat> y(a.cols(), Rat(0));
  for (size_t i = 0; i < a.cols(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j)
      if (s.v(i, j) != 0) y[i] += Rat(s.v(i, j)) * z[j];
    y[i] = mod1(y[i]);
  }
  return y;
}

}  // namespace cocycle
