#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cocycle/rational.hpp"

namespace cocycle {

// Abstract simplicial complex on integer vertex ids. Simplices are stored as
// strictly increasing tuples, one sorted list per degree, closed under faces.
class Nerve {
 public:
  static Nerve from_facets(const std::vector<std::vector<int>>& facets) {
    if (facets.empty()) throw parse_error("a nerve needs at least one facet");
    Nerve n;
    std::set<std::vector<int>> all;
    for (const auto& facet : facets) {
      if (facet.empty()) throw parse_error("empty facet");
      std::vector<int> s = facet;
      std::sort(s.begin(), s.end());
      for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) throw parse_error("facet repeats a vertex");
      for (int v : s)
        if (v < 0) throw parse_error("negative vertex id");
      // every subset is a simplex
      const size_t k = s.size();
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> face;
        for (size_t i = 0; i < k; ++i)
          if (mask >> i & 1) face.push_back(s[i]);
        all.insert(std::move(face));
      }
    }
    for (const auto& s : all) {
      int k = (int)s.size() - 1;
      if (k >= (int)n.by_degree_.size()) n.by_degree_.resize((size_t)k + 1);
      n.by_degree_[(size_t)k].push_back(s);
    }
    for (size_t k = 0; k < n.by_degree_.size(); ++k)
      for (size_t i = 0; i < n.by_degree_[k].size(); ++i)
        n.index_[n.by_degree_[k][i]] = i;
    return n;
  }

  int vertex_count() const { return (int)count(0); }
  int top_degree() const { return (int)by_degree_.size() - 1; }

  const std::vector<std::vector<int>>& simplices(int k) const {
    static const std::vector<std::vector<int>> none;
    if (k < 0 || k > top_degree()) return none;
    return by_degree_[(size_t)k];
  }

  size_t count(int k) const { return simplices(k).size(); }

  bool has_simplex(const std::vector<int>& s) const { return index_.count(s) > 0; }

  // position of an increasing tuple within its degree; throws if absent
  size_t index_of(const std::vector<int>& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw parse_error("simplex not in the nerve");
    return it->second;
  }

  // vertex ids in increasing order
  std::vector<int> vertices() const {
    std::vector<int> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
  }

 private:
  std::vector<std::vector<std::vector<int>>> by_degree_;  // [k] -> sorted tuples
  std::map<std::vector<int>, size_t> index_;
};

// Subsets of size k+2 all of whose (k+1)-element faces are simplices, whether
// or not the subset itself is one. Coboundaries of (k+1)-cochains can be
// evaluated on these, which keeps closedness checks meaningful on boundaries
// of simplices (e.g. sphere triangulations with no top cell).
inline std::vector<std::vector<int>> virtual_simplices(const Nerve& n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n.top_degree()) return out;
  std::set<std::vector<int>> seen;
  // candidates: extend each k-simplex by one vertex
  for (const auto& s : n.simplices(k)) {
    for (int v : n.vertices()) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      std::vector<int> cand = s;
      cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
      if (seen.count(cand)) continue;
      seen.insert(cand);
      bool all_faces = true;
      for (size_t drop = 0; drop < cand.size() && all_faces; ++drop) {
        std::vector<int> face;
        for (size_t i = 0; i < cand.size(); ++i)
          if (i != drop) face.push_back(cand[i]);
        all_faces = n.has_simplex(face);
      }
      if (all_faces) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cocycle
