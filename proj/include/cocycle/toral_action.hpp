#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "cocycle/combinatorics.hpp"
#include "cocycle/group.hpp"
#include "cocycle/linalg.hpp"
#include "cocycle/smith.hpp"

namespace cocycle {

using CMat = Eigen::MatrixXcd;

// Action of a finite group on the torus R^n/Z^n: an integer representation
// rho_z (checked to be a homomorphism into GL(n,Z)) and, optionally, the
// complex representation rho_c on C^{n/2} induced by a complex structure
// (checked to be a homomorphism up to float tolerance).
class ToralAction {
 public:
  ToralAction(FiniteGroup group, int n, std::vector<IntMat> rho_z, std::vector<CMat> rho_c = {})
      : group_(std::move(group)), n_(n), rho_z_(std::move(rho_z)), rho_c_(std::move(rho_c)) {
    if (n_ <= 0) throw parse_error("torus dimension must be positive");
    if ((int)rho_z_.size() != group_.order())
      throw parse_error("need one integer matrix per group element");
    for (const IntMat& m : rho_z_)
      if ((int)m.rows() != n_ || (int)m.cols() != n_)
        throw parse_error("integer representation matrix has wrong shape");
    for (int g = 0; g < group_.order(); ++g) {
      Int d = det(rho_z_[g]);
      if (d != 1 && d != -1)
        throw check_error("rho_Z(" + group_.label(g) + ") has determinant " + d.str() +
                          ", not invertible over Z");
    }
    for (int a = 0; a < group_.order(); ++a)
      for (int b = 0; b < group_.order(); ++b)
        if (rho_z_[a] * rho_z_[b] != rho_z_[group_.mul(a, b)])
          throw check_error("rho_Z is not a homomorphism at (" + group_.label(a) + "," +
                            group_.label(b) + ")");

    if (!rho_c_.empty()) {
      if ((int)rho_c_.size() != group_.order())
        throw parse_error("need one complex matrix per group element");
      if (n_ % 2 != 0)
        throw parse_error("complex structure requires even torus dimension");
      const int m = n_ / 2;
      for (const CMat& c : rho_c_)
        if (c.rows() != m || c.cols() != m)
          throw parse_error("complex representation matrix has wrong shape");
      const double tol = 1e-9;
      for (int a = 0; a < group_.order(); ++a)
        for (int b = 0; b < group_.order(); ++b) {
          double err = (rho_c_[a] * rho_c_[b] - rho_c_[group_.mul(a, b)]).cwiseAbs().maxCoeff();
          if (err > tol)
            throw check_error("rho_C is not a homomorphism at (" + group_.label(a) + "," +
                              group_.label(b) + ")");
        }
      for (int g = 0; g < group_.order(); ++g) {
        CMat pw = CMat::Identity(m, m);
        for (int k = 0; k < group_.element_order(g); ++k) pw = pw * rho_c_[g];
        if ((pw - CMat::Identity(m, m)).cwiseAbs().maxCoeff() > tol)
          throw check_error("rho_C(" + group_.label(g) + ") is not of finite order " +
                            std::to_string(group_.element_order(g)));
      }
    }
  }

  const FiniteGroup& group() const { return group_; }
  int torus_dim() const { return n_; }
  bool has_complex() const { return !rho_c_.empty(); }
  int complex_dim() const { return n_ / 2; }
  const IntMat& rho_z(int g) const { return rho_z_[g]; }
  const CMat& rho_c(int g) const {
    if (!has_complex()) throw check_error("action carries no complex representation");
    return rho_c_[g];
  }

 private:
  FiniteGroup group_;
  int n_;
  std::vector<IntMat> rho_z_;
  std::vector<CMat> rho_c_;
};

struct DegreeShift {
  Rat shift;      // sum of eigenvalue angles over 2*pi, each snapped into [0,1)
  Rat det_based;  // principal-log value of det rho_C(g), in (-1/2, 1/2]
};

// Eigenvalues of rho_C(g) are roots of unity of order dividing ord(g); their
// angles are snapped to exact multiples of 2*pi/ord(g) and summed. The
// determinant route only sees the answer mod 1 and is kept as a cross-check.
inline DegreeShift degree_shift(const ToralAction& act, int g, double tol = 1e-6) {
  const CMat& rho = act.rho_c(g);
  const int ord = act.group().element_order(g);
  const double two_pi = 8.0 * std::atan(1.0);

  Eigen::ComplexEigenSolver<CMat> solver(rho, false);
  if (solver.info() != Eigen::Success) throw check_error("eigenvalue computation failed");
  long long total = 0;
  for (int j = 0; j < rho.rows(); ++j) {
    std::complex<double> lam = solver.eigenvalues()[j];
    if (std::abs(std::abs(lam) - 1.0) > tol)
      throw check_error("eigenvalue of rho_C(" + act.group().label(g) +
                        ") is not on the unit circle");
    double theta = std::arg(lam);
    if (theta < 0) theta += two_pi;
    long long k = std::llround(theta * ord / two_pi);
    if (std::abs(theta - two_pi * (double)k / ord) > tol)
      throw check_error("eigenvalue angle of rho_C(" + act.group().label(g) +
                        ") is not a multiple of 2*pi/" + std::to_string(ord));
    total += k % ord;
  }

  DegreeShift out;
  out.shift = make_rat(Int(total), Int(ord));

  double phi = std::arg(rho.determinant());  // in (-pi, pi]
  long long k2 = std::llround(phi * ord / two_pi);
  if (std::abs(phi - two_pi * (double)k2 / ord) > tol)
    throw check_error("determinant angle of rho_C(" + act.group().label(g) +
                      ") is not a multiple of 2*pi/" + std::to_string(ord));
  if (2 * k2 <= -ord) k2 += ord;  // fold a numerically negative arg of -1 onto +1/2
  out.det_based = make_rat(Int(k2), Int(ord));
  if (mod1(out.det_based) != mod1(out.shift))
    throw check_error("determinant-based shift disagrees with the eigenvalue sum mod 1");
  return out;
}

struct FixedLocus {
  int fixed_dim = 0;
  Int components = 1;
  std::vector<std::vector<Rat>> reps;  // one rational point mod 1 per component
  // Smith data of rho_Z(g) - I, kept for component-membership queries
  std::vector<Int> invariants;
  IntMat v;
  RatMat v_inv;
};

// Two fixed points lie in the same component iff their difference is an
// integer vector plus something in the real kernel of rho_Z(g) - I.
inline bool same_component(const FixedLocus& fl, const std::vector<Rat>& x,
                           const std::vector<Rat>& y) {
  std::vector<Rat> d(x.size());
  for (size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  std::vector<Rat> w = fl.v_inv.apply(d);
  for (size_t i = 0; i < w.size(); ++i)
    if (fl.invariants[i] != 0 && !is_integer(w[i])) return false;
  return true;
}

inline FixedLocus fixed_locus(const ToralAction& act, int g) {
  const int n = act.torus_dim();
  IntMat m = act.rho_z(g) - IntMat::identity(n);
  SmithResult snf = smith_normal_form(m);

  FixedLocus fl;
  fl.invariants.resize(n);
  std::vector<int> torsion_slots;
  for (int i = 0; i < n; ++i) {
    fl.invariants[i] = snf.d(i, i);
    if (fl.invariants[i] == 0)
      ++fl.fixed_dim;
    else if (fl.invariants[i] > 1) {
      fl.components *= fl.invariants[i];
      torsion_slots.push_back(i);
    }
  }
  fl.v = snf.v;
  fl.v_inv = inverse(to_rat(snf.v));

  if (fl.components > 10000)
    throw check_error("fixed locus has " + fl.components.str() +
                      " components, beyond the enumeration bound");

  // odometer over the torsion slots, lexicographic
  std::vector<Int> counter(torsion_slots.size(), Int(0));
  while (true) {
    std::vector<Rat> y(n, Rat(0));
    for (size_t t = 0; t < torsion_slots.size(); ++t)
      y[torsion_slots[t]] = make_rat(counter[t], fl.invariants[torsion_slots[t]]);
    std::vector<Rat> x = to_rat(fl.v).apply(y);
    for (Rat& c : x) c = mod1(c);
    fl.reps.push_back(std::move(x));
    bool rolled_over = true;
    for (size_t t = torsion_slots.size(); t-- > 0;) {
      if (++counter[t] < fl.invariants[torsion_slots[t]]) {
        rolled_over = false;
        break;
      }
      counter[t] = 0;
    }
    if (rolled_over) break;
  }
  if (Int((long)fl.reps.size()) != fl.components)
    throw std::logic_error("component enumeration mismatch");
  return fl;
}

namespace detail {

// trace of the p-th exterior power: sum of p-by-p principal minors
inline Rat exterior_trace(const RatMat& m, int p) {
  if (p == 0) return Rat(1);
  Rat acc(0);
  for (const auto& subset : combinations((int)m.rows(), p)) {
    RatMat minor((size_t)p, (size_t)p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) minor(a, b) = m(subset[a], subset[b]);
    acc += det(minor);
  }
  return acc;
}

}  // namespace detail

// Betti numbers of (fixed locus of g)/C(g), by character averaging over the
// centralizer: the action on cohomology is permutation-of-components tensor
// exterior powers of the linear action on the fixed directions.
inline std::vector<Int> sector_betti(const ToralAction& act, int g) {
  const int n = act.torus_dim();
  FixedLocus fl = fixed_locus(act, g);
  std::vector<int> cent = centralizer(act.group(), g);

  RatMat m = to_rat(act.rho_z(g) - IntMat::identity(n));
  RatMat basis = basis_to_matrix(kernel_basis(m), (size_t)n);
  const int f = (int)basis.cols();
  if (f != fl.fixed_dim) throw std::logic_error("kernel dimension mismatch");

  std::vector<Rat> averages((size_t)f + 1, Rat(0));
  for (int c : cent) {
    RatMat rc = to_rat(act.rho_z(c));
    RatMat restricted = f > 0 ? solve_in_basis(basis, rc * basis) : RatMat(0, 0);

    long perm_fixed = 0;
    for (size_t j = 0; j < fl.reps.size(); ++j) {
      std::vector<Rat> image = rc.apply(fl.reps[j]);
      for (Rat& coord : image) coord = mod1(coord);
      int hits = 0;
      for (size_t jj = 0; jj < fl.reps.size(); ++jj)
        if (same_component(fl, image, fl.reps[jj])) ++hits;
      if (hits != 1) throw check_error("centralizer element does not permute the components");
      if (same_component(fl, image, fl.reps[j])) ++perm_fixed;
    }

    for (int p = 0; p <= f; ++p)
      averages[(size_t)p] += Rat(perm_fixed) * detail::exterior_trace(restricted, p);
  }

  std::vector<Int> betti;
  for (int p = 0; p <= f; ++p) {
    Rat b = averages[(size_t)p] / Rat((long)cent.size());
    if (!is_integer(b) || b < 0)
      throw check_error("character average for degree " + std::to_string(p) +
                        " is not a non-negative integer: " + format_rat(b));
    betti.push_back(num(b));
  }
  return betti;
}

struct SectorReport {
  int class_rep = 0;
  int fixed_dim = 0;
  Int components = 1;
  Rat shift;
  std::vector<Int> betti;
};

struct CrCohomology {
  std::vector<SectorReport> sectors;
  std::map<Rat, Int> table;  // total degree -> dimension, nonzero entries only
};

// One twisted sector per conjugacy class; its Betti numbers enter at degrees
// shifted up by twice the degree-shifting number of the class.
inline CrCohomology cr_cohomology(const ToralAction& act, double tol = 1e-6) {
  CrCohomology out;
  for (const auto& cls : conjugacy_classes(act.group())) {
    SectorReport sector;
    sector.class_rep = cls.front();
    FixedLocus fl = fixed_locus(act, sector.class_rep);
    sector.fixed_dim = fl.fixed_dim;
    sector.components = fl.components;
    sector.shift = degree_shift(act, sector.class_rep, tol).shift;
    sector.betti = sector_betti(act, sector.class_rep);
    if (sector.shift < 0 || (int)sector.betti.size() != sector.fixed_dim + 1)
      throw std::logic_error("malformed sector report");
    for (int p = 0; p < (int)sector.betti.size(); ++p)
      if (sector.betti[(size_t)p] != 0)
        out.table[Rat(2) * sector.shift + Rat(p)] += sector.betti[(size_t)p];
    out.sectors.push_back(std::move(sector));
  }
  return out;
}

}  // namespace cocycle
