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

// Lattice paths made of East (E) and North (N) unit steps, and the regions
// between two such paths. A region [P, Q] is the universe of every other
// module: its paths are the bases of the lattice path matroid M[P, Q].
//
// Step positions are 1-based. Heights are indexed 0..m+r, so height(0) == 0
// and height(m+r) == r.

#ifndef LPM_LATTICE_PATH_HPP_
#define LPM_LATTICE_PATH_HPP_

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpm {

enum class Step : unsigned char { kEast = 0, kNorth = 1 };

class PathWord {
 public:
  // parse_path. Throws Error(kEmptyWord) or Error(kInvalidCharacter) with the
  // 1-based offending position.
  static PathWord Parse(std::string_view word);
  static PathWord FromSteps(std::vector<Step> steps);
  // `heights` is h_0..h_n with h_0 == 0 and unit or zero increments.
  static PathWord FromHeights(std::span<const int> heights);

  int m() const { return m_; }
  int r() const { return r_; }
  int length() const { return static_cast<int>(steps_.size()); }

  Step step(int position) const { return steps_[position - 1]; }
  const std::vector<Step>& steps() const { return steps_; }
  int height(int i) const { return heights_[i]; }
  const std::vector<int>& heights() const { return heights_; }

  std::string str() const;

  friend bool operator==(const PathWord& a, const PathWord& b) {
    return a.steps_ == b.steps_;
  }
  // Lexicographic on words with E < N.
  friend std::strong_ordering operator<=>(const PathWord& a,
                                          const PathWord& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  PathWord() = default;
  void ComputeProfile();

  std::vector<Step> steps_;
  std::vector<int> heights_;
  int m_ = 0;
  int r_ = 0;
};

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Unit box with corners (col-1, row-1) and (col, row).
struct Box {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class Region {
 public:
  const PathWord& lower() const { return lower_; }
  const PathWord& upper() const { return upper_; }
  int m() const { return lower_.m(); }
  int r() const { return lower_.r(); }
  int size() const { return lower_.length(); }

  // p_i and q_i.
  int lower_height(int i) const { return lower_.height(i); }
  int upper_height(int i) const { return upper_.height(i); }

  bool contains(const PathWord& path) const;

  std::string str() const { return lower_.str() + "/" + upper_.str(); }

  friend bool operator==(const Region&, const Region&) = default;
  friend auto operator<=>(const Region& a, const Region& b) {
    if (auto c = a.lower_ <=> b.lower_; c != 0) return c;
    return a.upper_ <=> b.upper_;
  }

 private:
  friend Region MakeRegion(const PathWord& lower, const PathWord& upper);
  Region(PathWord lower, PathWord upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {}

  PathWord lower_;
  PathWord upper_;
};

// Throws Error(kEndpointMismatch) or Error(kDominanceViolation) carrying the
// first index i with p_i > q_i.
Region MakeRegion(const PathWord& lower, const PathWord& upper);
Region MakeRegion(std::string_view lower, std::string_view upper);

// All paths of the region in lexicographic order (E < N).
std::vector<PathWord> EnumeratePaths(const Region& region);

// Streams the paths in the same order as EnumeratePaths. The callback
// receives the step sequence of each path.
void ForEachPath(const Region& region,
                 const std::function<void(std::span<const Step>)>& visit);

// Points where the two boundary paths touch, (0,0) and (m,r) included.
std::vector<LatticePoint> IntersectionVertices(const Region& region);

// Full unit squares between `path` and E^m N^r.
long AreaBelow(const PathWord& path);

// Boxes weakly between the boundary paths, sorted by (col, row).
std::vector<Box> RegionBoxes(const Region& region);

// The region of all paths whose heights satisfy lo[i] <= h_i <= hi[i]
// (vectors of length n+1), or nullopt when no path does. The pointwise
// minimum and maximum feasible paths become the new boundary paths.
std::optional<Region> RegionFromBounds(std::vector<int> lo,
                                       std::vector<int> hi);

// P = E^{a1} N^{a2} ..., stored as the first letter and positive run lengths.
struct RunLengthForm {
  Step first = Step::kEast;
  std::vector<int> runs;
};

RunLengthForm RunLengths(const PathWord& path);

// E^m N^r and N^r E^m.
PathWord BottomPath(int m, int r);
PathWord TopPath(int m, int r);

}  // namespace lpm

#endif  // LPM_LATTICE_PATH_HPP_
