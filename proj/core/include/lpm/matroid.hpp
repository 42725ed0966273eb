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

// The transversal matroid M[P, Q] of a region: its interval presentation,
// bases, independence test, connected components and single-element minors.
// Ground set elements are 1..m+r.

#ifndef LPM_MATROID_HPP_
#define LPM_MATROID_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpm/lattice_path.hpp"

namespace lpm {

struct Interval {
  int lo = 0;
  int hi = 0;
  bool contains(int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// N_i = [l_i, u_i]: l_i is the position of the i-th North step of the upper
// path, u_i that of the lower path. Both endpoint sequences are strictly
// increasing.
struct IntervalPresentation {
  int ground_size = 0;
  std::vector<Interval> intervals;
};

IntervalPresentation Presentation(const Region& region);

// Size of a maximum partial transversal inside `subset` (elements 1-based,
// any order, no repeats). Greedy: scan elements upwards, give each one the
// free interval containing it with the smallest upper end.
int MatchingSize(const IntervalPresentation& presentation,
                 std::span<const int> subset);

bool IsIndependent(const IntervalPresentation& presentation,
                   std::span<const int> subset);

// Throws Error(kWrongCardinality) unless |subset| == r.
bool IsBasis(const Region& region, std::span<const int> subset);

class BasisVector {
 public:
  explicit BasisVector(std::vector<std::uint8_t> coords)
      : coords_(std::move(coords)) {}

  const std::vector<std::uint8_t>& coords() const { return coords_; }
  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int position) const { return coords_[position - 1]; }
  std::vector<int> support() const;
  std::string str() const;

  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;

 private:
  std::vector<std::uint8_t> coords_;
};

// Incidence vectors of the bases, in lexicographic order of coordinates
// (the same order as EnumeratePaths).
std::vector<BasisVector> Bases(const Region& region);

enum class BlockKind { kLoop, kColoop, kConnected };

struct Block {
  int first = 0;
  int last = 0;
  BlockKind kind = BlockKind::kConnected;
  int size() const { return last - first + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

struct ComponentPartition {
  std::vector<Block> blocks;
  int count() const { return static_cast<int>(blocks.size()); }
};

// Splits the ground set at the interior touch points of the two boundary
// paths. One-step segments are forced steps: loops (E) or coloops (N).
ComponentPartition Components(const Region& region);

bool IsConnected(const Region& region);

// The sub-region over the steps block.first..block.last.
Region BlockRegion(const Region& region, const Block& block);

// Paths of `region` with step `element` forced to North (value 1) or East
// (value 0), with that step removed. Throws Error(kEmptyFace) if no path
// qualifies or the ground set would become empty.
Region Delete(const Region& region, int element, int value);

std::string_view BlockKindName(BlockKind kind);

}  // namespace lpm

#endif  // LPM_MATROID_HPP_
