#pragma once

#include <algorithm>
#include <map>
#include <vector>

namespace cocycle {

/// All strictly increasing k-tuples from {0,...,n-1}, lexicographically
/// ordered.  This ordering fixes every wedge basis in the project.
inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Lookup table from increasing tuple to its lexicographic position.
class CombIndex {
 public:
  CombIndex() = default;
  CombIndex(int n, int k) : tuples_(combinations(n, k)) {
    for (size_t i = 0; i < tuples_.size(); ++i) pos_[tuples_[i]] = i;
  }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  size_t size() const { return tuples_.size(); }
  const std::vector<int>& tuple(size_t i) const { return tuples_[i]; }

  // -1 when the tuple is not a member (e.g. has a repeat after sorting)
  long index(const std::vector<int>& t) const {
    auto it = pos_.find(t);
    return it == pos_.end() ? -1 : (long)it->second;
  }

 private:
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, size_t> pos_;
};

/// Sign of the permutation sorting `t` ascending; 0 if entries repeat.
inline int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

/// Inserts value m into the increasing tuple `rest`; returns the sign of the
/// shuffle, or 0 if m already occurs.  `out` receives the merged tuple.
inline int merge_sign(int m, const std::vector<int>& rest, std::vector<int>& out) {
  int pos = 0;
  for (int r : rest) {
    if (r == m) return 0;
    if (r < m) ++pos;
  }
  out.clear();
  out.reserve(rest.size() + 1);
  out.insert(out.end(), rest.begin(), rest.begin() + pos);
  out.push_back(m);
  out.insert(out.end(), rest.begin() + pos, rest.end());
  return (pos % 2 == 0) ? 1 : -1;
}

}  // namespace cocycle
