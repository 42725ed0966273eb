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

#include "lpm/matroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpm/error.hpp"

namespace lpm {

namespace {

std::vector<int> NorthPositions(const PathWord& path) {
  std::vector<int> out;
  out.reserve(path.r());
  for (int i = 1; i <= path.length(); ++i) {
    if (path.step(i) == Step::kNorth) out.push_back(i);
  }
  return out;
}

}  // namespace

IntervalPresentation Presentation(const Region& region) {
  const auto l = NorthPositions(region.upper());
  const auto u = NorthPositions(region.lower());
  IntervalPresentation out;
  out.ground_size = region.size();
  out.intervals.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out.intervals.push_back({l[i], u[i]});
  return out;
}

int MatchingSize(const IntervalPresentation& presentation,
                 std::span<const int> subset) {
  std::vector<int> elements(subset.begin(), subset.end());
  std::sort(elements.begin(), elements.end());
  const auto& intervals = presentation.intervals;
  std::vector<bool> used(intervals.size(), false);
  int matched = 0;
  for (int x : elements) {
    // Upper ends increase with the index, so the first free interval that
    // contains x is the one with the earliest deadline.
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      if (!used[k] && intervals[k].contains(x)) {
        used[k] = true;
        ++matched;
        break;
      }
    }
  }
  return matched;
}

bool IsIndependent(const IntervalPresentation& presentation,
                   std::span<const int> subset) {
  return MatchingSize(presentation, subset) == static_cast<int>(subset.size());
}

bool IsBasis(const Region& region, std::span<const int> subset) {
  if (static_cast<int>(subset.size()) != region.r()) {
    throw Error(ErrorCode::kWrongCardinality,
                "expected " + std::to_string(region.r()) + " elements, got " +
                    std::to_string(subset.size()));
  }
  std::vector<Step> steps(region.size(), Step::kEast);
  for (int x : subset) {
    if (x < 1 || x > region.size() || steps[x - 1] == Step::kNorth) {
      throw std::invalid_argument("subset is not a set of ground elements");
    }
    steps[x - 1] = Step::kNorth;
  }
  int height = 0;
  for (int i = 1; i <= region.size(); ++i) {
    if (steps[i - 1] == Step::kNorth) ++height;
    if (height < region.lower_height(i) || height > region.upper_height(i)) {
      return false;
    }
  }
  return true;
}

std::vector<int> BasisVector::support() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (coords_[i]) out.push_back(i + 1);
  }
  return out;
}

std::string BasisVector::str() const {
  std::string out;
  out.reserve(coords_.size());
  for (auto c : coords_) out.push_back(c ? '1' : '0');
  return out;
}

std::vector<BasisVector> Bases(const Region& region) {
  std::vector<BasisVector> out;
  ForEachPath(region, [&](std::span<const Step> steps) {
    std::vector<std::uint8_t> coords(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
      coords[i] = steps[i] == Step::kNorth ? 1 : 0;
    }
    out.emplace_back(std::move(coords));
  });
  return out;
}

ComponentPartition Components(const Region& region) {
  std::vector<int> touch;
  for (int i = 0; i <= region.size(); ++i) {
    if (region.lower_height(i) == region.upper_height(i)) touch.push_back(i);
  }
  ComponentPartition out;
  for (std::size_t k = 0; k + 1 < touch.size(); ++k) {
    Block block{touch[k] + 1, touch[k + 1], BlockKind::kConnected};
    if (block.size() == 1) {
      block.kind = region.lower().step(block.first) == Step::kNorth
                       ? BlockKind::kColoop
                       : BlockKind::kLoop;
    }
    out.blocks.push_back(block);
  }
  return out;
}

bool IsConnected(const Region& region) {
  return Components(region).count() == 1;
}

Region BlockRegion(const Region& region, const Block& block) {
  auto slice = [&](const PathWord& path) {
    std::vector<Step> steps(path.steps().begin() + (block.first - 1),
                            path.steps().begin() + block.last);
    return PathWord::FromSteps(std::move(steps));
  };
  return MakeRegion(slice(region.lower()), slice(region.upper()));
}

Region Delete(const Region& region, int element, int value) {
  const int n = region.size();
  if (element < 1 || element > n || (value != 0 && value != 1)) {
    throw std::invalid_argument("bad element or value for Delete");
  }
  if (n == 1) {
    throw Error(ErrorCode::kEmptyFace,
                "deleting the only element leaves an empty ground set");
  }
  // New heights g_0..g_{n-1}: g_j = h_j before the removed step and
  // g_j = h_{j+1} - value after it.
  std::vector<int> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    if (j < element) {
      lo[j] = region.lower_height(j);
      hi[j] = region.upper_height(j);
    } else {
      lo[j] = region.lower_height(j + 1) - value;
      hi[j] = region.upper_height(j + 1) - value;
    }
  }
  // The removed step links h_{element-1} and h_element.
  lo[element - 1] =
      std::max(lo[element - 1], region.lower_height(element) - value);
  hi[element - 1] =
      std::min(hi[element - 1], region.upper_height(element) - value);
  auto child = RegionFromBounds(std::move(lo), std::move(hi));
  if (!child) {
    throw Error(ErrorCode::kEmptyFace,
                "no basis has coordinate " + std::to_string(element) +
                    " equal to " + std::to_string(value),
                element);
  }
  return *child;
}

std::string_view BlockKindName(BlockKind kind) {
  switch (kind) {
    case BlockKind::kLoop: return "loop";
    case BlockKind::kColoop: return "coloop";
    case BlockKind::kConnected: return "connected";
  }
  return "connected";
}

}  // namespace lpm
