// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lpm/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lpm/error.hpp"
#include "lpm/matroid.hpp"

namespace lpm {

std::string BorderStrip::directions() const {
  std::string word;
  for (std::size_t i = 1; i < boxes.size(); ++i) {
    word.push_back(boxes[i].row > boxes[i - 1].row ? 'U' : 'R');
  }
  return word;
}

BorderStrip StripFromDescents(int length, const std::vector<int>& descents) {
  if (length < 1) throw std::invalid_argument("strip needs at least one box");
  BorderStrip strip;
  Box box{1, 1};
  strip.boxes.push_back(box);
  for (int i = 1; i < length; ++i) {
    if (std::find(descents.begin(), descents.end(), i) != descents.end()) {
      ++box.row;
      strip.descents.push_back(i);
    } else {
      ++box.col;
    }
    strip.boxes.push_back(box);
  }
  return strip;
}

Region StripRegion(const BorderStrip& strip) {
  if (strip.boxes.empty()) throw std::invalid_argument("strip has no boxes");
  const int m = strip.boxes.back().col;
  const int r = strip.boxes.back().row;
  std::vector<int> lo(m + 1, r + 1), hi(m + 1, 0);
  for (const Box& b : strip.boxes) {
    lo[b.col] = std::min(lo[b.col], b.row);
    hi[b.col] = std::max(hi[b.col], b.row);
  }
  auto build = [&](auto east_height) {
    std::vector<Step> steps;
    int height = 0;
    for (int c = 1; c <= m; ++c) {
      for (; height < east_height(c); ++height) steps.push_back(Step::kNorth);
      steps.push_back(Step::kEast);
    }
    for (; height < r; ++height) steps.push_back(Step::kNorth);
    return PathWord::FromSteps(std::move(steps));
  };
  return MakeRegion(build([&](int c) { return lo[c] - 1; }),
                    build([&](int c) { return hi[c]; }));
}

namespace {

bool SplitHolds(const IntervalPresentation& pres, int x, int j) {
  const int r = static_cast<int>(pres.intervals.size());
  if (j < 1 || j >= r) return false;
  const Interval& a = pres.intervals[j - 1];
  const Interval& b = pres.intervals[j];
  return a.lo < x && x < a.hi && b.lo < x + 1 && x + 1 < b.hi;
}

int PrefixHeight(const BasisVector& v, int x) {
  int h = 0;
  for (int i = 0; i < x; ++i) h += v.coords()[i];
  return h;
}

Region Recognize(const std::vector<BasisVector>& bases) {
  const int n = bases.front().size();
  std::vector<int> low(n + 1, n), high(n + 1, 0);
  for (const auto& b : bases) {
    int h = 0;
    for (int i = 0; i <= n; ++i) {
      if (i > 0) h += b.coords()[i - 1];
      low[i] = std::min(low[i], h);
      high[i] = std::max(high[i], h);
    }
  }
  return MakeRegion(PathWord::FromHeights(low), PathWord::FromHeights(high));
}

}  // namespace

std::optional<SplitPoint> FindSplit(const Region& region) {
  const auto pres = Presentation(region);
  const int r = region.r();
  for (int j = 1; j < r; ++j) {
    const Interval& a = pres.intervals[j - 1];
    for (int x = a.lo + 1; x < a.hi; ++x) {
      if (SplitHolds(pres, x, j)) return SplitPoint{x, j};
    }
  }
  return std::nullopt;
}

SplitResult HyperplaneSplit(const Region& region, SplitPoint split) {
  if (!SplitHolds(Presentation(region), split.x, split.j)) {
    throw Error(ErrorCode::kInvalidSplit,
                "(x=" + std::to_string(split.x) + ", j=" +
                    std::to_string(split.j) + ") is not a split of " +
                    region.str());
  }
  std::vector<BasisVector> left_bases, right_bases;
  for (auto& b : Bases(region)) {
    const int h = PrefixHeight(b, split.x);
    if (h <= split.j) left_bases.push_back(b);
    if (h >= split.j) right_bases.push_back(b);
  }
  Region left = Recognize(left_bases);
  Region right = Recognize(right_bases);
  if (Bases(left) != left_bases || Bases(right) != right_bases) {
    throw std::logic_error("split children of " + region.str() +
                           " are not path regions");
  }
  return {std::move(left), std::move(right), split};
}

bool IsBorderStrip(const Region& region) {
  const auto boxes = RegionBoxes(region);
  const std::set<Box> present(boxes.begin(), boxes.end());
  for (const Box& b : boxes) {
    if (present.contains({b.col + 1, b.row}) &&
        present.contains({b.col, b.row + 1}) &&
        present.contains({b.col + 1, b.row + 1})) {
      return false;
    }
  }
  return true;
}

std::vector<BorderStrip> BorderStrips(const Region& region) {
  std::vector<BorderStrip> out;
  if (region.size() == 1) {
    out.emplace_back();
    return out;
  }
  const auto boxes = RegionBoxes(region);
  const std::set<Box> present(boxes.begin(), boxes.end());
  const Box first = boxes.front();
  const Box last = boxes.back();
  BorderStrip current;
  auto walk = [&](auto&& self, Box at) -> void {
    current.boxes.push_back(at);
    if (at == last) {
      out.push_back(current);
    } else {
      const Box east{at.col + 1, at.row};
      const Box north{at.col, at.row + 1};
      if (present.contains(east)) self(self, east);
      if (present.contains(north)) {
        current.descents.push_back(current.length());
        self(self, north);
        current.descents.pop_back();
      }
    }
    current.boxes.pop_back();
  };
  walk(walk, first);
  return out;
}

GoodPartition SplitPartition(const Region& region, SplitPoint split) {
  const int n = region.size();
  const auto pres = Presentation(region);
  GoodPartition gp;
  for (int i = 1; i <= n; ++i) (i <= split.x ? gp.e1 : gp.e2).push_back(i);
  gp.r1 = MatchingSize(pres, gp.e1);
  gp.r2 = MatchingSize(pres, gp.e2);
  gp.a1 = gp.r1 - split.j;
  gp.a2 = gp.r2 - (region.r() - split.j);
  return gp;
}

namespace {

// Calls visit(subset) for every k-subset of `pool`.
template <typename Visit>
bool AllSubsets(const std::vector<int>& pool, int k, Visit visit) {
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == k) return visit(chosen);
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      const bool ok = self(self, i + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

bool VerifyGoodPartition(const Region& region, const GoodPartition& gp) {
  const int n = region.size();
  if (n > 12) {
    throw Error(ErrorCode::kTooLarge,
                "good partition check is exhaustive; ground set exceeds 12");
  }
  std::vector<int> all = gp.e1;
  all.insert(all.end(), gp.e2.begin(), gp.e2.end());
  std::sort(all.begin(), all.end());
  std::vector<int> expected(n);
  for (int i = 0; i < n; ++i) expected[i] = i + 1;
  if (all != expected) return false;

  const auto pres = Presentation(region);
  if (MatchingSize(pres, gp.e1) != gp.r1 || MatchingSize(pres, gp.e2) != gp.r2) {
    return false;
  }
  if (!(0 < gp.a1 && gp.a1 < gp.r1 && 0 < gp.a2 && gp.a2 < gp.r2)) return false;
  if (gp.r1 + gp.r2 != region.r() + gp.a1 + gp.a2) return false;

  // Every independent set extends within its side, so checking the largest
  // allowed sizes covers the smaller ones.
  std::vector<std::vector<int>> left;
  AllSubsets(gp.e1, gp.r1 - gp.a1, [&](const std::vector<int>& x) {
    if (IsIndependent(pres, x)) left.push_back(x);
    return true;
  });
  return AllSubsets(gp.e2, gp.r2 - gp.a2, [&](const std::vector<int>& y) {
    if (!IsIndependent(pres, y)) return true;
    for (const auto& x : left) {
      std::vector<int> joined = x;
      joined.insert(joined.end(), y.begin(), y.end());
      if (!IsIndependent(pres, joined)) return false;
    }
    return true;
  });
}

DecompositionNode Decompose(const Region& region) {
  if (!IsConnected(region)) {
    throw Error(ErrorCode::kDisconnectedRegion,
                "region " + region.str() + " is not connected");
  }
  DecompositionNode node{region, FindSplit(region), {}, std::nullopt};
  if (!node.split) {
    node.strip = BorderStrips(region).front();
    return node;
  }
  auto children = HyperplaneSplit(region, *node.split);
  node.children.push_back(Decompose(children.left));
  node.children.push_back(Decompose(children.right));
  return node;
}

std::vector<Region> Leaves(const DecompositionNode& root) {
  if (root.children.empty()) return {root.region};
  std::vector<Region> out;
  for (const auto& child : root.children) {
    auto sub = Leaves(child);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace lpm
