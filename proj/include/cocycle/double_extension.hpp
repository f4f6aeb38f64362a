#pragma once

#include <string>
#include <utility>

#include "cocycle/invariant_forms.hpp"
#include "cocycle/lie_algebra.hpp"

namespace cocycle {

/// Rejection carrying the concrete antisymmetry counterexample:
/// w(u_i,u_j) != -w(u_j,u_i) for w(u,u') = <h(u),u'>.
struct skew_violation : check_error {
  skew_violation(int i_, int j_, Rat wij_, Rat wji_)
      : check_error("h is not skew w.r.t. the form: w(e" + std::to_string(i_ + 1) + ",e" +
                    std::to_string(j_ + 1) + ") = " + format_rat(wij_) + " but w(e" +
                    std::to_string(j_ + 1) + ",e" + std::to_string(i_ + 1) + ") = " +
                    format_rat(wji_)),
        i(i_), j(j_), w_ij(std::move(wij_)), w_ji(std::move(wji_)) {}
  int i, j;
  Rat w_ij, w_ji;
};

/// Double extension of the abelian metric algebra (U, <,>) by a skew
/// derivation h: the algebra on V* ⊕ U ⊕ V (basis f, e_1..e_m, z) with
///   [z, u]      = h(u)
///   [u_1, u_2]  = w(u_1,u_2) f,   w(u_1,u_2) = <h(u_1), u_2>
///   f central,
/// carrying the scalar product <,>' = <,> on U, <f,z> = <z,z> = 1.
inline std::pair<LieAlgebra, BilinearForm> double_extension(const BilinearForm& u_form,
                                                            const RatMat& h) {
  const int m = u_form.dim;
  if ((int)u_form.gram.rows() != m || (int)u_form.gram.cols() != m)
    throw parse_error("double_extension: gram shape mismatch");
  if (!is_symmetric(u_form)) throw check_error("double_extension: U form is not symmetric");
  if (rank(u_form.gram) < (size_t)m)
    throw check_error("double_extension: U form is degenerate");
  if ((int)h.rows() != m || (int)h.cols() != m)
    throw parse_error("double_extension: h shape mismatch");

  // w(e_i, e_j) = <h e_i, e_j>; h must be skew for w to be antisymmetric
  RatMat w(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rat acc(0);
      for (int k = 0; k < m; ++k)
        if (h(k, i) != 0) acc += h(k, i) * u_form.gram(k, j);
      w(i, j) = acc;
    }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      if (w(i, j) != -w(j, i)) throw skew_violation(i, j, w(i, j), w(j, i));

  const int n = m + 2;  // f = 0, e_i = 1..m, z = m+1
  std::vector<std::string> names;
  names.push_back("f");
  for (int i = 0; i < m; ++i) names.push_back("e" + std::to_string(i + 1));
  names.push_back("z");
  LieAlgebra L(n, names);

  for (int i = 0; i < m; ++i) {
    std::vector<Rat> hz(n, Rat(0));
    for (int k = 0; k < m; ++k) hz[1 + k] = h(k, i);
    // store as [e_i, z] = -h(e_i) so indices are increasing
    for (auto& x : hz) x = -x;
    L.set_bracket(1 + i, m + 1, hz);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (w(i, j) == 0) continue;
      std::vector<Rat> val(n, Rat(0));
      val[0] = w(i, j);
      L.set_bracket(1 + i, 1 + j, val);
    }

  BilinearForm prod;
  prod.dim = n;
  prod.gram = RatMat(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod.gram(1 + i, 1 + j) = u_form.gram(i, j);
  prod.gram(0, n - 1) = prod.gram(n - 1, 0) = 1;
  prod.gram(n - 1, n - 1) = 1;

  // postconditions: these are theorems once h is skew, so a failure here is a bug
  if (!validate(L).jacobi_ok) throw std::logic_error("double_extension: Jacobi failed");
  if (!is_ad_invariant(L, prod))
    throw std::logic_error("double_extension: product is not ad-invariant");
  if (rank(prod.gram) != (size_t)n)
    throw std::logic_error("double_extension: product is degenerate");
  return {std::move(L), std::move(prod)};
}

}  // namespace cocycle
