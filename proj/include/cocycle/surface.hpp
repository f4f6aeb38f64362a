#pragma once

#include <map>
#include <queue>
#include <vector>

#include "cocycle/cochain.hpp"
#include "cocycle/nerve.hpp"

namespace cocycle {

// closed oriented surface: a pure 2-dimensional nerve plus a sign per
// triangle, with the induced edge orientations cancelling in pairs
struct OrientedSurface {
  Nerve nerve;
  std::vector<int> orientation;  // +1 / -1 per 2-simplex, nerve order
};

inline OrientedSurface make_surface(const Nerve& n, const std::vector<int>& orientation) {
  if (n.top_degree() != 2)
    throw check_error("not a surface: top simplices have dimension " +
                      std::to_string(n.top_degree()));
  if (orientation.size() != n.count(2))
    throw parse_error("need one orientation sign per triangle");
  for (int s : orientation)
    if (s != 1 && s != -1) throw parse_error("orientation signs must be +1 or -1");

  IntMat d1 = delta_matrix(n, 1);
  for (size_t e = 0; e < n.count(1); ++e) {
    int incident = 0;
    Int signed_sum = 0;
    for (size_t t = 0; t < n.count(2); ++t) {
      if (d1(t, e) == 0) continue;
      ++incident;
      signed_sum += Int(orientation[t]) * d1(t, e);
    }
    if (incident != 2)
      throw check_error("not closed: an edge lies in " + std::to_string(incident) +
                        " triangles, need exactly 2");
    if (signed_sum != 0)
      throw check_error("not oriented: induced edge orientations do not cancel");
  }
  return OrientedSurface{n, orientation};
}

// propagates signs across the dual graph; fails on non-orientable surfaces
inline OrientedSurface auto_orient(const Nerve& n) {
  if (n.top_degree() != 2)
    throw check_error("not a surface: top simplices have dimension " +
                      std::to_string(n.top_degree()));
  IntMat d1 = delta_matrix(n, 1);
  size_t triangles = n.count(2);
  std::vector<std::vector<size_t>> edge_to_tri(n.count(1));
  for (size_t t = 0; t < triangles; ++t)
    for (size_t e = 0; e < n.count(1); ++e)
      if (d1(t, e) != 0) edge_to_tri[e].push_back(t);
  for (const auto& inc : edge_to_tri)
    if (inc.size() != 2)
      throw check_error("not closed: an edge lies in " + std::to_string(inc.size()) +
                        " triangles, need exactly 2");

  std::vector<int> sign(triangles, 0);
  for (size_t seed = 0; seed < triangles; ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::queue<size_t> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
      size_t t = frontier.front();
      frontier.pop();
      for (size_t e = 0; e < n.count(1); ++e) {
        if (d1(t, e) == 0) continue;
        size_t other = edge_to_tri[e][0] == t ? edge_to_tri[e][1] : edge_to_tri[e][0];
        // cancellation across e forces the neighbour's sign
        int forced = -sign[t] * (int)d1(t, e) * (int)d1(other, e);
        if (sign[other] == 0) {
          sign[other] = forced;
          frontier.push(other);
        } else if (sign[other] != forced) {
          throw check_error("not orientable: sign propagation is inconsistent");
        }
      }
    }
  }
  return make_surface(n, sign);
}

}  // namespace cocycle
