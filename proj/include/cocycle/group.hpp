#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cocycle/rational.hpp"

namespace cocycle {

// Finite group as a validated Cayley table. Multiplication is table(a, b) = a*b;
// the identity, inverse and associativity laws are checked on construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {})
      : mul_(std::move(table)), labels_(std::move(labels)) {
    const int n = (int)mul_.size();
    if (n == 0) throw parse_error("group table is empty");
    for (const auto& row : mul_) {
      if ((int)row.size() != n) throw parse_error("group table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw parse_error("group table entry out of range");
    }
    if (labels_.empty()) {
      for (int i = 0; i < n; ++i) labels_.push_back("g" + std::to_string(i));
    }
    if ((int)labels_.size() != n) throw parse_error("label count does not match group order");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j]) throw parse_error("duplicate element label '" + labels_[i] + "'");

    id_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
      if (ok) {
        id_ = e;
        break;
      }
    }
    if (id_ < 0) throw check_error("group table has no identity element");

    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (mul_[a][b] == id_ && mul_[b][a] == id_) {
          inv_[a] = b;
          break;
        }
      if (inv_[a] < 0)
        throw check_error("group element '" + labels_[a] + "' has no inverse");
    }

    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw check_error("group table is not associative at (" + labels_[a] + "," +
                              labels_[b] + "," + labels_[c] + ")");
  }

  // Closure of a list of permutations of {0..m-1} under composition.
  // Element 0 is the identity; discovery order (BFS over the given generators)
  // fixes the labelling, so the same generators always produce the same table.
  static FiniteGroup from_perm_generators(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) throw parse_error("no permutation generators given");
    const int m = (int)gens[0].size();
    if (m == 0) throw parse_error("empty permutation");
    for (const auto& g : gens) {
      if ((int)g.size() != m) throw parse_error("permutation generators act on different sets");
      std::vector<bool> seen(m, false);
      for (int v : g) {
        if (v < 0 || v >= m || seen[v]) throw parse_error("generator is not a permutation");
        seen[v] = true;
      }
    }

    std::vector<int> ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> elems{ident};
    std::map<std::vector<int>, int> index{{ident, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : gens) {
        // left-multiply by the generator: (g . p)(x) = g(p(x))
        std::vector<int> q(m);
        for (int x = 0; x < m; ++x) q[x] = g[elems[head][x]];
        if (index.emplace(q, (int)elems.size()).second) elems.push_back(std::move(q));
        if (elems.size() > 100000) throw check_error("permutation closure exceeds 100000 elements");
      }
    }

    const int n = (int)elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> q(m);
        for (int x = 0; x < m; ++x) q[x] = elems[a][elems[b][x]];
        table[a][b] = index.at(q);
      }
    std::vector<std::string> labels;
    for (const auto& p : elems) {
      std::string s;
      for (int x = 0; x < m; ++x) {
        if (x) s += '.';
        s += std::to_string(p[x]);
      }
      labels.push_back(s);
    }
    return FiniteGroup(std::move(table), std::move(labels));
  }

  static FiniteGroup cyclic(int n) {
    if (n <= 0) throw parse_error("cyclic group order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
      labels.push_back(std::to_string(a));
      for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(table), std::move(labels));
  }

  static FiniteGroup trivial() { return cyclic(1); }

  // S3 as permutations of three points
  static FiniteGroup symmetric3() { return from_perm_generators({{1, 0, 2}, {1, 2, 0}}); }

  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order() * h.order();
    auto idx = [&](int a, int b) { return a * h.order() + b; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < h.order(); ++b) {
        labels[idx(a, b)] = "(" + g.label(a) + "," + h.label(b) + ")";
        for (int c = 0; c < g.order(); ++c)
          for (int d = 0; d < h.order(); ++d)
            table[idx(a, b)][idx(c, d)] = idx(g.mul(a, c), h.mul(b, d));
      }
    return FiniteGroup(std::move(table), std::move(labels));
  }

  int order() const { return (int)mul_.size(); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int id() const { return id_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int label_index(const std::string& name) const {
    for (int i = 0; i < order(); ++i)
      if (labels_[i] == name) return i;
    throw parse_error("unknown group element '" + name + "'");
  }

  // g h g^{-1}
  int conjugate(int g, int h) const { return mul_[mul_[g][h]][inv_[g]]; }

  int element_order(int a) const {
    int x = a, k = 1;
    while (x != id_) {
      x = mul_[x][a];
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = a + 1; b < order(); ++b)
        if (mul_[a][b] != mul_[b][a]) return false;
    return true;
  }

  bool same_table(const FiniteGroup& other) const {
    return mul_ == other.mul_ && id_ == other.id_;
  }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<std::string> labels_;
  std::vector<int> inv_;
  int id_ = 0;
};

// Partition of the elements into conjugacy classes; classes ordered by their
// smallest member, members sorted.
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::set<int> cls;
    for (int x = 0; x < n; ++x) cls.insert(g.conjugate(x, a));
    classes.emplace_back(cls.begin(), cls.end());
    for (int c : classes.back()) done[c] = true;
  }
  return classes;
}

inline std::vector<int> centralizer(const FiniteGroup& g, int h) {
  if (h < 0 || h >= g.order()) throw parse_error("element index out of range");
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, h) == g.mul(h, x)) out.push_back(x);
  return out;
}

namespace detail {

inline uint64_t to_mask(const std::vector<int>& elems, int order) {
  uint64_t m = 0;
  for (int e : elems) {
    if (e < 0 || e >= order) throw parse_error("element index out of range");
    m |= uint64_t(1) << e;
  }
  return m;
}

inline std::vector<int> from_mask(uint64_t m, int order) {
  std::vector<int> out;
  for (int e = 0; e < order; ++e)
    if (m >> e & 1) out.push_back(e);
  return out;
}

inline uint64_t subgroup_closure(const FiniteGroup& g, uint64_t seed) {
  uint64_t m = seed | (uint64_t(1) << g.id());
  for (bool grew = true; grew;) {
    grew = false;
    auto elems = from_mask(m, g.order());
    for (int a : elems)
      for (int b : elems) {
        uint64_t bit = uint64_t(1) << g.mul(a, b);
        if (!(m & bit)) {
          m |= bit;
          grew = true;
        }
      }
  }
  return m;
}

}  // namespace detail

// Throws if the given elements do not form a subgroup.
inline void require_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  uint64_t m = detail::to_mask(h, g.order());
  if (!(m >> g.id() & 1)) throw check_error("subset does not contain the identity");
  for (int a : h)
    for (int b : h)
      if (!(m >> g.mul(a, b) & 1))
        throw check_error("subset is not closed under multiplication: " + g.label(a) + "*" +
                          g.label(b) + " escapes");
}

inline std::vector<int> normalizer(const FiniteGroup& g, const std::vector<int>& h) {
  require_subgroup(g, h);
  uint64_t hm = detail::to_mask(h, g.order());
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    uint64_t conj = 0;
    for (int a : h) conj |= uint64_t(1) << g.conjugate(x, a);
    if (conj == hm) out.push_back(x);
  }
  return out;
}

// Every subgroup, found by growing closures one generator at a time.
// Subgroups come back as sorted element lists, ordered by their bitmask.
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, int max_order = 24) {
  if (g.order() > max_order)
    throw check_error("group order " + std::to_string(g.order()) +
                      " exceeds the subgroup enumeration bound " + std::to_string(max_order));
  std::set<uint64_t> subs;
  std::vector<uint64_t> frontier{detail::subgroup_closure(g, 0)};
  subs.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<uint64_t> next;
    for (uint64_t s : frontier)
      for (int x = 0; x < g.order(); ++x) {
        if (s >> x & 1) continue;
        uint64_t t = detail::subgroup_closure(g, s | (uint64_t(1) << x));
        if (subs.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (uint64_t m : subs) out.push_back(detail::from_mask(m, g.order()));
  return out;
}

// Subgroups grouped by conjugacy; classes ordered by smallest member mask.
inline std::vector<std::vector<std::vector<int>>> subgroup_classes(const FiniteGroup& g,
                                                                   int max_order = 24) {
  auto subs = all_subgroups(g, max_order);
  std::set<uint64_t> pending;
  for (const auto& s : subs) pending.insert(detail::to_mask(s, g.order()));
  std::vector<std::vector<std::vector<int>>> classes;
  while (!pending.empty()) {
    uint64_t rep = *pending.begin();
    auto elems = detail::from_mask(rep, g.order());
    std::set<uint64_t> orbit;
    for (int x = 0; x < g.order(); ++x) {
      uint64_t conj = 0;
      for (int a : elems) conj |= uint64_t(1) << g.conjugate(x, a);
      orbit.insert(conj);
    }
    std::vector<std::vector<int>> cls;
    for (uint64_t m : orbit) {
      pending.erase(m);
      cls.push_back(detail::from_mask(m, g.order()));
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// f : src -> dst given elementwise
inline bool is_group_homomorphism(const std::vector<int>& f, const FiniteGroup& src,
                                  const FiniteGroup& dst) {
  if ((int)f.size() != src.order()) return false;
  for (int v : f)
    if (v < 0 || v >= dst.order()) return false;
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (f[src.mul(a, b)] != dst.mul(f[a], f[b])) return false;
  return true;
}

inline std::vector<int> hom_kernel(const std::vector<int>& f, const FiniteGroup& src,
                                   const FiniteGroup& dst) {
  std::vector<int> out;
  for (int a = 0; a < src.order(); ++a)
    if (f[a] == dst.id()) out.push_back(a);
  return out;
}

inline std::vector<int> hom_image(const std::vector<int>& f) {
  std::set<int> im(f.begin(), f.end());
  return std::vector<int>(im.begin(), im.end());
}

// conjugation by g as an elementwise map
inline std::vector<int> ad_map(const FiniteGroup& grp, int g) {
  std::vector<int> f(grp.order());
  for (int a = 0; a < grp.order(); ++a) f[a] = grp.conjugate(g, a);
  return f;
}

inline std::vector<int> compose_maps(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> f(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) f[i] = outer[inner[i]];
  return f;
}

}  // namespace cocycle
