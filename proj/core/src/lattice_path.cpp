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

#include "lpm/lattice_path.hpp"

#include <algorithm>
#include <cassert>

#include "lpm/error.hpp"

namespace lpm {

PathWord PathWord::Parse(std::string_view word) {
  if (word.empty()) throw Error(ErrorCode::kEmptyWord, "path word is empty");
  PathWord path;
  path.steps_.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'E': path.steps_.push_back(Step::kEast); break;
      case 'N': path.steps_.push_back(Step::kNorth); break;
      default:
        throw Error(ErrorCode::kInvalidCharacter,
                    "unexpected '" + std::string(1, word[i]) +
                        "' at position " + std::to_string(i + 1),
                    static_cast<int>(i + 1));
    }
  }
  path.ComputeProfile();
  return path;
}

PathWord PathWord::FromSteps(std::vector<Step> steps) {
  if (steps.empty()) throw Error(ErrorCode::kEmptyWord, "path word is empty");
  PathWord path;
  path.steps_ = std::move(steps);
  path.ComputeProfile();
  return path;
}

PathWord PathWord::FromHeights(std::span<const int> heights) {
  assert(heights.size() >= 2 && heights[0] == 0);
  std::vector<Step> steps;
  steps.reserve(heights.size() - 1);
  for (std::size_t i = 1; i < heights.size(); ++i) {
    const int delta = heights[i] - heights[i - 1];
    assert(delta == 0 || delta == 1);
    steps.push_back(delta == 1 ? Step::kNorth : Step::kEast);
  }
  return FromSteps(std::move(steps));
}

void PathWord::ComputeProfile() {
  heights_.assign(steps_.size() + 1, 0);
  m_ = r_ = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == Step::kNorth) {
      ++r_;
    } else {
      ++m_;
    }
    heights_[i + 1] = r_;
  }
}

std::string PathWord::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::kNorth ? 'N' : 'E');
  return out;
}

bool Region::contains(const PathWord& path) const {
  if (path.m() != m() || path.r() != r()) return false;
  for (int i = 1; i <= size(); ++i) {
    const int h = path.height(i);
    if (h < lower_height(i) || h > upper_height(i)) return false;
  }
  return true;
}

Region MakeRegion(const PathWord& lower, const PathWord& upper) {
  if (lower.m() != upper.m() || lower.r() != upper.r()) {
    throw Error(ErrorCode::kEndpointMismatch,
                "paths end at (" + std::to_string(lower.m()) + "," +
                    std::to_string(lower.r()) + ") and (" +
                    std::to_string(upper.m()) + "," +
                    std::to_string(upper.r()) + ")");
  }
  for (int i = 1; i <= lower.length(); ++i) {
    if (lower.height(i) > upper.height(i)) {
      throw Error(ErrorCode::kDominanceViolation,
                  "lower path rises above upper path at step " +
                      std::to_string(i),
                  i);
    }
  }
  return Region(lower, upper);
}

Region MakeRegion(std::string_view lower, std::string_view upper) {
  return MakeRegion(PathWord::Parse(lower), PathWord::Parse(upper));
}

void ForEachPath(const Region& region,
                 const std::function<void(std::span<const Step>)>& visit) {
  const int n = region.size();
  std::vector<Step> steps(n);
  // East is tried before North so words come out in lexicographic order.
  auto extend = [&](auto&& self, int depth, int height) -> void {
    if (depth == n) {
      visit(steps);
      return;
    }
    for (int rise = 0; rise <= 1; ++rise) {
      const int h = height + rise;
      if (h < region.lower_height(depth + 1) ||
          h > region.upper_height(depth + 1)) {
        continue;
      }
      steps[depth] = rise == 1 ? Step::kNorth : Step::kEast;
      self(self, depth + 1, h);
    }
  };
  extend(extend, 0, 0);
}

std::vector<PathWord> EnumeratePaths(const Region& region) {
  std::vector<PathWord> paths;
  ForEachPath(region, [&](std::span<const Step> steps) {
    paths.push_back(
        PathWord::FromSteps(std::vector<Step>(steps.begin(), steps.end())));
  });
  return paths;
}

std::vector<LatticePoint> IntersectionVertices(const Region& region) {
  std::vector<LatticePoint> points;
  for (int i = 0; i <= region.size(); ++i) {
    const int p = region.lower_height(i);
    if (p == region.upper_height(i)) points.push_back({i - p, p});
  }
  return points;
}

long AreaBelow(const PathWord& path) {
  long area = 0;
  for (int i = 1; i <= path.length(); ++i) {
    if (path.step(i) == Step::kEast) area += path.height(i);
  }
  return area;
}

namespace {

// Height of the path while it takes its c-th East step, c = 1..m.
std::vector<int> EastStepHeights(const PathWord& path) {
  std::vector<int> out;
  out.reserve(path.m());
  for (int i = 1; i <= path.length(); ++i) {
    if (path.step(i) == Step::kEast) out.push_back(path.height(i));
  }
  return out;
}

}  // namespace

std::vector<Box> RegionBoxes(const Region& region) {
  const auto low = EastStepHeights(region.lower());
  const auto high = EastStepHeights(region.upper());
  std::vector<Box> boxes;
  for (int c = 1; c <= region.m(); ++c) {
    for (int row = low[c - 1] + 1; row <= high[c - 1]; ++row) {
      boxes.push_back({c, row});
    }
  }
  return boxes;
}

std::optional<Region> RegionFromBounds(std::vector<int> lo,
                                       std::vector<int> hi) {
  assert(lo.size() == hi.size() && lo.size() >= 2);
  const int n = static_cast<int>(lo.size()) - 1;
  lo[0] = std::max(lo[0], 0);
  hi[0] = std::min(hi[0], 0);

  // Tightest lower path: propagate backwards (a path can drop at most one
  // per step going left), then forwards (heights never decrease).
  std::vector<int> low = lo;
  for (int j = n - 1; j >= 0; --j) low[j] = std::max(low[j], low[j + 1] - 1);
  for (int j = 1; j <= n; ++j) low[j] = std::max(low[j], low[j - 1]);

  std::vector<int> high = hi;
  for (int j = 1; j <= n; ++j) high[j] = std::min(high[j], high[j - 1] + 1);
  for (int j = n - 1; j >= 0; --j) high[j] = std::min(high[j], high[j + 1]);

  for (int j = 0; j <= n; ++j) {
    if (low[j] > high[j]) return std::nullopt;
  }
  return MakeRegion(PathWord::FromHeights(low), PathWord::FromHeights(high));
}

RunLengthForm RunLengths(const PathWord& path) {
  RunLengthForm form;
  form.first = path.step(1);
  Step current = form.first;
  int run = 0;
  for (Step s : path.steps()) {
    if (s == current) {
      ++run;
    } else {
      form.runs.push_back(run);
      current = s;
      run = 1;
    }
  }
  form.runs.push_back(run);
  return form;
}

PathWord BottomPath(int m, int r) {
  std::vector<Step> steps(m, Step::kEast);
  steps.insert(steps.end(), r, Step::kNorth);
  return PathWord::FromSteps(std::move(steps));
}

PathWord TopPath(int m, int r) {
  std::vector<Step> steps(r, Step::kNorth);
  steps.insert(steps.end(), m, Step::kEast);
  return PathWord::FromSteps(std::move(steps));
}

}  // namespace lpm
