#pragma once

#include "cocycle/double_extension.hpp"
#include "cocycle/lie_algebra.hpp"
#include "cocycle/nerve.hpp"

namespace testhelpers {

using namespace cocycle;

// [x,y] = z
inline LieAlgebra heisenberg() {
  LieAlgebra L(3, {"x", "y", "z"});
  L.set_bracket(0, 1, {Rat(0), Rat(0), Rat(1)});
  return L;
}

// Heisenberg plus a Jacobi-breaking bracket [x,z] = x
inline LieAlgebra perturbed_heisenberg() {
  LieAlgebra L(3, {"x", "y", "z"});
  L.set_bracket(0, 1, {Rat(0), Rat(0), Rat(1)});
  L.set_bracket(0, 2, {Rat(1), Rat(0), Rat(0)});
  return L;
}

inline BilinearForm euclidean_plane() {
  BilinearForm b;
  b.dim = 2;
  b.gram = RatMat::identity(2);
  return b;
}

// rotation generator: h e1 = e2, h e2 = -e1
inline RatMat rotation_h() {
  RatMat h(2, 2);
  h(1, 0) = 1;
  h(0, 1) = -1;
  return h;
}

// the oscillator algebra together with its invariant product <,>'
inline std::pair<LieAlgebra, BilinearForm> oscillator() {
  return double_extension(euclidean_plane(), rotation_h());
}

inline Nerve triangle_nerve() { return Nerve::from_facets({{0, 1, 2}}); }

inline Nerve solid_tetra() { return Nerve::from_facets({{0, 1, 2, 3}}); }

inline Nerve tetra_boundary() {
  return Nerve::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// minimal 6-vertex projective plane
inline Nerve rp2_nerve() {
  return Nerve::from_facets({{1, 2, 4},
                             {1, 2, 5},
                             {1, 3, 4},
                             {1, 3, 6},
                             {1, 5, 6},
                             {2, 3, 5},
                             {2, 3, 6},
                             {2, 4, 6},
                             {3, 4, 5},
                             {4, 5, 6}});
}

// 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
inline Nerve torus_nerve() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Nerve::from_facets(facets);
}

}  // namespace testhelpers
