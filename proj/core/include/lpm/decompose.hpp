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

// Hyperplane splits of a connected region and the recursive decomposition
// into border strips.

#ifndef LPM_DECOMPOSE_HPP_
#define LPM_DECOMPOSE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lpm/lattice_path.hpp"

namespace lpm {

// A monotone chain of boxes, each one step East or North of the previous.
// Descent at i (1-based) when box i+1 sits directly above box i.
struct BorderStrip {
  std::vector<Box> boxes;
  std::vector<int> descents;

  int length() const { return static_cast<int>(boxes.size()); }
  // 'R' for an East move, 'U' for a North move; length() - 1 letters.
  std::string directions() const;

  friend bool operator==(const BorderStrip&, const BorderStrip&) = default;
};

// The strip starting at box (1, 1) whose moves are North exactly at the
// given descents.
BorderStrip StripFromDescents(int length, const std::vector<int>& descents);

// The region whose boxes are exactly the strip's. Needs at least one box.
Region StripRegion(const BorderStrip& strip);

struct SplitPoint {
  int x = 0;  // ground position
  int j = 0;  // row threshold
  friend bool operator==(const SplitPoint&, const SplitPoint&) = default;
};

// Smallest j, then smallest x, with s_j < x < t_j and s_{j+1} < x+1 <
// t_{j+1} for the presentation intervals [s_i, t_i]. Absent exactly for
// border strips.
std::optional<SplitPoint> FindSplit(const Region& region);

struct SplitResult {
  Region left;   // paths with h_x <= j
  Region right;  // paths with h_x >= j
  SplitPoint split;
};

// Throws Error(kInvalidSplit) if (x, j) does not satisfy the split
// condition. The children are built by filtering the parent's bases and
// recognised again as regions; a disagreement is a logic_error.
SplitResult HyperplaneSplit(const Region& region, SplitPoint split);

// No 2x2 block of boxes. Requires a connected region.
bool IsBorderStrip(const Region& region);

// Monotone box paths from the region's first box to its last, ordered by
// direction word (R < U). A connected region with a single step has one
// empty strip.
std::vector<BorderStrip> BorderStrips(const Region& region);

struct GoodPartition {
  std::vector<int> e1;
  std::vector<int> e2;
  int r1 = 0;
  int r2 = 0;
  int a1 = 0;
  int a2 = 0;
};

// E1 = {1..x}, E2 = {x+1..n}, a1 = r1 - j, a2 = r2 - (r - j).
GoodPartition SplitPartition(const Region& region, SplitPoint split);

// Checks complementarity, the stated ranks, 0 < a_i < r_i, r1 + r2 = r +
// a1 + a2, and exhaustively that independent X in E1, Y in E2 with |X| <=
// r1 - a1, |Y| <= r2 - a2 have X u Y independent. Throws Error(kTooLarge)
// beyond 12 elements.
bool VerifyGoodPartition(const Region& region, const GoodPartition& gp);

struct DecompositionNode {
  Region region;
  std::optional<SplitPoint> split;
  std::vector<DecompositionNode> children;  // empty for leaves
  std::optional<BorderStrip> strip;         // set on leaves
};

// Requires a connected region.
DecompositionNode Decompose(const Region& region);

// Leaf regions, left to right.
std::vector<Region> Leaves(const DecompositionNode& root);

}  // namespace lpm

#endif  // LPM_DECOMPOSE_HPP_
