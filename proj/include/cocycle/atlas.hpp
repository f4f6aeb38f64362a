#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "cocycle/group.hpp"

namespace cocycle {

// Chart-compatibility data: a finite group per chart, transition homomorphisms
// hom(x,y): G_y -> G_x, and twist elements c_{xyz} in G_x correcting the
// failure of the transitions to compose on the nose.
class ChartAtlas {
 public:
  explicit ChartAtlas(std::vector<FiniteGroup> charts) : charts_(std::move(charts)) {
    if (charts_.empty()) throw parse_error("atlas needs at least one chart");
  }

  const FiniteGroup& chart(int x) const {
    if (x < 0 || x >= (int)charts_.size()) throw parse_error("chart index out of range");
    return charts_[x];
  }
  int chart_count() const { return (int)charts_.size(); }

  void add_hom(int x, int y, std::vector<int> f) {
    const FiniteGroup& src = chart(y);
    const FiniteGroup& dst = chart(x);
    if (!is_group_homomorphism(f, src, dst))
      throw check_error("transition map (" + std::to_string(x) + "," + std::to_string(y) +
                        ") is not a group homomorphism");
    homs_[{x, y}] = std::move(f);
  }

  void add_twist(int x, int y, int z, int c) {
    chart(y);
    chart(z);
    if (c < 0 || c >= chart(x).order()) throw parse_error("twist element out of range");
    twists_[{x, y, z}] = c;
  }

  const std::vector<int>* hom(int x, int y) const {
    auto it = homs_.find({x, y});
    return it == homs_.end() ? nullptr : &it->second;
  }

  const std::map<std::tuple<int, int, int>, int>& twists() const { return twists_; }

 private:
  std::vector<FiniteGroup> charts_;
  std::map<std::pair<int, int>, std::vector<int>> homs_;
  std::map<std::tuple<int, int, int>, int> twists_;
};

struct AtlasViolation {
  int x, y, z;
  int gamma;     // element of G_z where the relation fails
  int composed;  // hom(x,y)(hom(y,z)(gamma))
  int twisted;   // c * hom(x,z)(gamma) * c^{-1}
};

struct AtlasReport {
  bool ok = true;
  std::vector<AtlasViolation> violations;
};

// Checks hom(x,y) . hom(y,z) = Ad(c_{xyz}) . hom(x,z) on every stored triple.
inline AtlasReport atlas_check(const ChartAtlas& atlas) {
  AtlasReport report;
  for (const auto& [triple, c] : atlas.twists()) {
    auto [x, y, z] = triple;
    const std::vector<int>* fxy = atlas.hom(x, y);
    const std::vector<int>* fyz = atlas.hom(y, z);
    const std::vector<int>* fxz = atlas.hom(x, z);
    if (!fxy || !fyz || !fxz)
      throw check_error("missing transition map for triple (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")");
    const FiniteGroup& gx = atlas.chart(x);
    for (int gamma = 0; gamma < atlas.chart(z).order(); ++gamma) {
      int lhs = (*fxy)[(*fyz)[gamma]];
      int rhs = gx.conjugate(c, (*fxz)[gamma]);
      if (lhs != rhs) {
        report.ok = false;
        report.violations.push_back({x, y, z, gamma, lhs, rhs});
      }
    }
  }
  return report;
}

}  // namespace cocycle
