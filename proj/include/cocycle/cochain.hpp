#pragma once

#include <vector>

#include "cocycle/combinatorics.hpp"
#include "cocycle/matrix.hpp"
#include "cocycle/nerve.hpp"

namespace cocycle {

enum class CoeffKind { integers, rationals, integers_mod, rationals_mod1 };

struct Coefficients {
  CoeffKind kind = CoeffKind::integers;
  Int modulus = 0;  // only for integers_mod

  static Coefficients Z() { return {CoeffKind::integers, 0}; }
  static Coefficients Q() { return {CoeffKind::rationals, 0}; }
  static Coefficients Zmod(Int m) {
    if (m <= 1) throw parse_error("modulus must be at least 2");
    return {CoeffKind::integers_mod, std::move(m)};
  }
  static Coefficients Qmod1() { return {CoeffKind::rationals_mod1, 0}; }

  bool operator==(const Coefficients& o) const {
    return kind == o.kind && (kind != CoeffKind::integers_mod || modulus == o.modulus);
  }

  // canonical representative: residues in [0, m), mod-1 values in [0, 1)
  Rat normalize(const Rat& v) const {
    switch (kind) {
      case CoeffKind::integers:
        if (!is_integer(v)) throw parse_error("value " + format_rat(v) + " is not an integer");
        return v;
      case CoeffKind::rationals:
        return v;
      case CoeffKind::integers_mod: {
        if (!is_integer(v)) throw parse_error("value " + format_rat(v) + " is not an integer");
        Int r = num(v) % modulus;
        if (r < 0) r += modulus;
        return Rat(r);
      }
      case CoeffKind::rationals_mod1:
        return mod1(v);
    }
    throw std::logic_error("bad coefficient kind");
  }

  std::string describe() const {
    switch (kind) {
      case CoeffKind::integers: return "Z";
      case CoeffKind::rationals: return "Q";
      case CoeffKind::integers_mod: return "Z/" + modulus.str();
      case CoeffKind::rationals_mod1: return "Q/Z";
    }
    return "?";
  }
};

// Abelian cochain: one value per k-simplex, in the nerve's simplex order.
// Values on permuted tuples follow the alternating-sign convention through
// value_at; storage is on increasing tuples only.
struct AbCochain {
  int degree = 0;
  Coefficients coeffs;
  std::vector<Rat> values;

  static AbCochain zero(const Nerve& n, int k, Coefficients c) {
    AbCochain out;
    out.degree = k;
    out.coeffs = std::move(c);
    out.values.assign(n.count(k), Rat(0));
    return out;
  }

  void ensure_shape(const Nerve& n) const {
    if (values.size() != n.count(degree))
      throw parse_error("cochain needs a value on every simplex of degree " +
                        std::to_string(degree));
  }

  // evaluation on a possibly unsorted tuple, alternating in the entries
  Rat value_at(const Nerve& n, std::vector<int> tuple) const {
    int sign = sort_sign(tuple);
    if (sign == 0) return Rat(0);
    Rat v = values[n.index_of(tuple)];
    return coeffs.normalize(sign > 0 ? v : -v);
  }
};

inline AbCochain operator+(const AbCochain& a, const AbCochain& b) {
  if (a.degree != b.degree || !(a.coeffs == b.coeffs) || a.values.size() != b.values.size())
    throw parse_error("cochain shape mismatch");
  AbCochain out = a;
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = out.coeffs.normalize(a.values[i] + b.values[i]);
  return out;
}

inline AbCochain operator-(const AbCochain& a, const AbCochain& b) {
  if (a.degree != b.degree || !(a.coeffs == b.coeffs) || a.values.size() != b.values.size())
    throw parse_error("cochain shape mismatch");
  AbCochain out = a;
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = out.coeffs.normalize(a.values[i] - b.values[i]);
  return out;
}

inline bool is_zero(const AbCochain& c) {
  for (const Rat& v : c.values)
    if (v != 0) return false;
  return true;
}

// (delta c)(i0..i_{k+1}) = sum_j (-1)^j c(faces)
inline AbCochain coboundary(const Nerve& n, const AbCochain& c) {
  c.ensure_shape(n);
  AbCochain out = AbCochain::zero(n, c.degree + 1, c.coeffs);
  const auto& top = n.simplices(c.degree + 1);
  for (size_t t = 0; t < top.size(); ++t) {
    Rat acc(0);
    for (size_t drop = 0; drop < top[t].size(); ++drop) {
      std::vector<int> face;
      for (size_t i = 0; i < top[t].size(); ++i)
        if (i != drop) face.push_back(top[t][i]);
      Rat v = c.values[n.index_of(face)];
      acc += (drop % 2 == 0) ? v : -v;
    }
    out.values[t] = c.coeffs.normalize(acc);
  }
  return out;
}

// same alternating sum evaluated on explicit tuples (virtual simplices)
inline std::vector<Rat> coboundary_on(const Nerve& n, const AbCochain& c,
                                      const std::vector<std::vector<int>>& tuples) {
  c.ensure_shape(n);
  std::vector<Rat> out;
  for (const auto& s : tuples) {
    Rat acc(0);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      Rat v = c.values[n.index_of(face)];
      acc += (drop % 2 == 0) ? v : -v;
    }
    out.push_back(c.coeffs.normalize(acc));
  }
  return out;
}

// incidence matrix of delta from degree k to k+1, entries in {-1, 0, 1}
inline IntMat delta_matrix(const Nerve& n, int k) {
  IntMat m(n.count(k + 1), n.count(k));
  const auto& top = n.simplices(k + 1);
  for (size_t t = 0; t < top.size(); ++t)
    for (size_t drop = 0; drop < top[t].size(); ++drop) {
      std::vector<int> face;
      for (size_t i = 0; i < top[t].size(); ++i)
        if (i != drop) face.push_back(top[t][i]);
      m(t, n.index_of(face)) += (drop % 2 == 0) ? 1 : -1;
    }
  return m;
}

}  // namespace cocycle
