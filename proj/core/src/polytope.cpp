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

#include "lpm/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "lpm/error.hpp"

namespace lpm {

long Inequality::Evaluate(const BasisVector& v) const {
  long sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * v.coords()[i];
  return sum;
}

bool Inequality::SatisfiedBy(const BasisVector& v) const {
  const long value = Evaluate(v);
  switch (rel) {
    case Relation::kLessEqual: return value <= rhs;
    case Relation::kEqual: return value == rhs;
    case Relation::kGreaterEqual: return value >= rhs;
  }
  return false;
}

std::pair<std::vector<int>, int> Inequality::AsLessEqual() const {
  if (rel != Relation::kGreaterEqual) return {coeffs, rhs};
  std::vector<int> negated(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), negated.begin(),
                 [](int c) { return -c; });
  return {negated, -rhs};
}

std::string Inequality::str() const {
  std::string lhs;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!lhs.empty()) lhs += coeffs[i] > 0 ? " + " : " - ";
    else if (coeffs[i] < 0) lhs += "-";
    const int mag = std::abs(coeffs[i]);
    if (mag != 1) lhs += std::to_string(mag);
    lhs += "x" + std::to_string(i + 1);
  }
  if (lhs.empty()) lhs = "0";
  const char* op = rel == Relation::kLessEqual ? " <= "
                   : rel == Relation::kEqual   ? " = "
                                               : " >= ";
  return lhs + op + std::to_string(rhs);
}

namespace {

Inequality Bound(int n, int element, bool upper) {
  Inequality ineq;
  ineq.coeffs.assign(n, 0);
  ineq.coeffs[element - 1] = 1;
  ineq.rel = upper ? Relation::kLessEqual : Relation::kGreaterEqual;
  ineq.rhs = upper ? 1 : 0;
  ineq.kind = upper ? InequalityKind::kUpperBound : InequalityKind::kLowerBound;
  ineq.index = element;
  return ineq;
}

Inequality Prefix(int n, int length, int rhs, bool upper) {
  Inequality ineq;
  ineq.coeffs.assign(n, 0);
  std::fill(ineq.coeffs.begin(), ineq.coeffs.begin() + length, 1);
  ineq.rel = upper ? Relation::kLessEqual : Relation::kGreaterEqual;
  ineq.rhs = rhs;
  ineq.kind =
      upper ? InequalityKind::kUpperPrefix : InequalityKind::kLowerPrefix;
  ineq.index = length;
  return ineq;
}

Inequality AffineHull(int n, int r) {
  Inequality eq;
  eq.coeffs.assign(n, 1);
  eq.rel = Relation::kEqual;
  eq.rhs = r;
  eq.kind = InequalityKind::kAffineHull;
  eq.index = n;
  return eq;
}

}  // namespace

HRepresentation HRep(const Region& region) {
  const int n = region.size();
  HRepresentation h;
  h.equalities.push_back(AffineHull(n, region.r()));
  for (int i = 1; i < n; ++i) {
    h.inequalities.push_back(Prefix(n, i, region.lower_height(i), false));
    h.inequalities.push_back(Prefix(n, i, region.upper_height(i), true));
  }
  for (int i = 1; i <= n; ++i) {
    h.inequalities.push_back(Bound(n, i, false));
    h.inequalities.push_back(Bound(n, i, true));
  }
  return h;
}

std::vector<BasisVector> Vertices(const Region& region) { return Bases(region); }

int Dimension(const Region& region) {
  return region.size() - Components(region).count();
}

namespace {

// Incremental row echelon form over the integers. Rows are kept primitive
// (divided by their content) so entries stay small for 0/1 input.
class IntegerEchelon {
 public:
  using Wide = __int128;

  explicit IntegerEchelon(int width) : width_(width) {}

  // Returns true if `row` was independent of the rows added so far.
  bool Add(std::vector<Wide> row) {
    for (const auto& [col, pivot] : pivots_) {
      const Wide factor = row[col];
      if (factor == 0) continue;
      const Wide scale = pivot[col];
      for (int c = 0; c < width_; ++c) row[c] = row[c] * scale - pivot[c] * factor;
      Normalize(row);
    }
    for (int c = 0; c < width_; ++c) {
      if (row[c] != 0) {
        pivots_.emplace_back(c, std::move(row));
        return true;
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  static Wide Gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static void Normalize(std::vector<Wide>& row) {
    Wide g = 0;
    for (auto v : row) g = Gcd(g, v);
    if (g > 1) {
      for (auto& v : row) v /= g;
    }
  }

  int width_;
  std::vector<std::pair<int, std::vector<Wide>>> pivots_;
};

int AffineRankOf(std::span<const BasisVector> points,
                 const std::vector<int>& subset, int stop_above) {
  if (subset.size() <= 1) return 0;
  const auto& base = points[subset.front()].coords();
  const int width = static_cast<int>(base.size());
  IntegerEchelon echelon(width);
  for (std::size_t k = 1; k < subset.size(); ++k) {
    const auto& v = points[subset[k]].coords();
    std::vector<IntegerEchelon::Wide> row(width);
    for (int c = 0; c < width; ++c) row[c] = int{v[c]} - int{base[c]};
    echelon.Add(std::move(row));
    if (echelon.rank() > stop_above) break;
  }
  return echelon.rank();
}

}  // namespace

int AffineRank(std::span<const BasisVector> points) {
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return AffineRankOf(points, all, static_cast<int>(points.size()));
}

int AffineRank(std::span<const BasisVector> points,
               std::span<const int> subset) {
  return AffineRankOf(points, std::vector<int>(subset.begin(), subset.end()),
                      static_cast<int>(points.size()));
}

std::vector<Edge> Edges(const Region& region) {
  const auto vertices = Vertices(region);
  std::vector<Edge> edges;
  for (int a = 0; a < static_cast<int>(vertices.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(vertices.size()); ++b) {
      int diff = 0;
      for (int i = 0; i < region.size() && diff <= 2; ++i) {
        diff += vertices[a].coords()[i] != vertices[b].coords()[i];
      }
      // Equal cardinality makes Hamming distance 2 the same as e_i - e_j.
      if (diff == 2) edges.emplace_back(a, b);
    }
  }
  return edges;
}

long EdgeCountByArea(const Region& region) {
  if (region.lower() != BottomPath(region.m(), region.r())) {
    throw Error(ErrorCode::kNotGeneralizedCatalan,
                "lower path " + region.lower().str() + " is not E^m N^r");
  }
  long total = 0;
  ForEachPath(region, [&](std::span<const Step> steps) {
    int height = 0;
    for (Step s : steps) {
      if (s == Step::kNorth) {
        ++height;
      } else {
        total += height;
      }
    }
  });
  return total;
}

namespace {

Rational CatalanNumber(int n) { return Rational(Binomial(2 * n, n), n + 1); }

Rational FourPowerHalf(int n) {
  BigInt p = 1;
  for (int i = 0; i < n; ++i) p *= 4;
  return Rational(p, 2);
}

}  // namespace

BigInt CatalanEdgeFormula(int n) {
  if (n < 1) throw std::invalid_argument("CatalanEdgeFormula needs n >= 1");
  const Rational area_to_diagonal =
      FourPowerHalf(n) - Rational(Binomial(2 * n + 2, n + 1), 4);
  const Rational value =
      Rational(n * n, 2) * CatalanNumber(n) - area_to_diagonal;
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error("edge closed form is not an integer");
  }
  return boost::multiprecision::numerator(value);
}

Rational CatalanEdgeFormulaAsStated(int n) {
  return Rational(n * n, 2) * CatalanNumber(n) - FourPowerHalf(n) -
         Rational(Binomial(2 * n + 2, n + 1), 4);
}

int FacetList::recovered_count() const {
  return static_cast<int>(std::count_if(
      facets.begin(), facets.end(), [](const Facet& f) { return f.recovered; }));
}

namespace {

std::vector<int> TightSet(const Inequality& ineq,
                          const std::vector<BasisVector>& vertices) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) {
    if (ineq.TightOn(vertices[k])) out.push_back(k);
  }
  return out;
}

int KindOrder(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::kLowerBound: return 0;
    case InequalityKind::kUpperBound: return 1;
    case InequalityKind::kUpperPrefix: return 2;
    case InequalityKind::kLowerPrefix: return 3;
    case InequalityKind::kAffineHull: return 4;
  }
  return 5;
}

struct Candidate {
  Inequality inequality;
  std::optional<int> run_boundary;
};

// Corner analysis. With P = E^{a1} N^{a2} ... N^{a_2l} and
// Q = N^{b1} E^{b2} ... E^{b_2s}:
//   upper prefix at b1+...+b_2k (k < s): an E-run of Q ends, N follows;
//   lower prefix at a1+...+a_2k (k < l): an N-run of P ends, E follows;
// box bounds are dropped when those prefix facets imply them:
//   x_i >= 0 from  sum_{<=i} >= j  and  sum_{<=i-1} <= j,
//   x_i <= 1 from  sum_{<=i-1} >= j  and  sum_{<=i} <= j+1,
//   x_i <= 1 for i <= 1 + b2 when b1 == 1 (sum_{<=1+b2} <= 1),
//   x_i <= 1 for i > a1+...+a_{2l-2} when a_2l == 1 (suffix sum <= 1).
std::vector<Candidate> CornerCandidates(const Region& region) {
  const int n = region.size();
  const RunLengthForm q_runs = RunLengths(region.upper());
  const RunLengthForm p_runs = RunLengths(region.lower());

  std::vector<int> upper_at(n + 1, -1);  // rhs of the upper prefix facet at i
  std::vector<int> lower_at(n + 1, -1);
  std::vector<Candidate> out;

  int pos = 0;
  for (std::size_t k = 0; k + 1 < q_runs.runs.size(); k += 2) {
    pos += q_runs.runs[k] + q_runs.runs[k + 1];
    if (k + 2 >= q_runs.runs.size()) break;  // the last E-run ends at n
    upper_at[pos] = region.upper_height(pos);
    out.push_back({Prefix(n, pos, upper_at[pos], true),
                   static_cast<int>(k / 2) + 1});
  }
  pos = 0;
  for (std::size_t k = 0; k + 1 < p_runs.runs.size(); k += 2) {
    pos += p_runs.runs[k] + p_runs.runs[k + 1];
    if (k + 2 >= p_runs.runs.size()) break;
    lower_at[pos] = region.lower_height(pos);
    out.push_back({Prefix(n, pos, lower_at[pos], false),
                   static_cast<int>(k / 2) + 1});
  }

  const int b1 = q_runs.runs[0];
  const int b2 = q_runs.runs.size() > 1 ? q_runs.runs[1] : 0;
  const int a_last = p_runs.runs.back();
  const int tail_start =
      n - a_last - (p_runs.runs.size() >= 2 ? p_runs.runs[p_runs.runs.size() - 2] : 0);

  for (int i = 1; i <= n; ++i) {
    const bool lower_implied =
        lower_at[i] >= 0 && upper_at[i - 1] >= 0 && lower_at[i] == upper_at[i - 1];
    if (!lower_implied) out.push_back({Bound(n, i, false), std::nullopt});
  }
  for (int i = 1; i <= n; ++i) {
    bool upper_implied = lower_at[i - 1] >= 0 && upper_at[i] >= 0 &&
                         upper_at[i] == lower_at[i - 1] + 1;
    if (b1 == 1 && i <= 1 + b2) upper_implied = true;
    if (a_last == 1 && i > tail_start) upper_implied = true;
    if (!upper_implied) out.push_back({Bound(n, i, true), std::nullopt});
  }
  return out;
}

void SortFacets(std::vector<Facet>& facets) {
  std::stable_sort(facets.begin(), facets.end(),
                   [](const Facet& a, const Facet& b) {
                     const int ka = KindOrder(a.inequality.kind);
                     const int kb = KindOrder(b.inequality.kind);
                     if (ka != kb) return ka < kb;
                     return a.inequality.index < b.inequality.index;
                   });
}

}  // namespace

FacetList Facets(const Region& region) {
  if (!IsConnected(region)) {
    throw Error(ErrorCode::kDisconnectedRegion,
                "region " + region.str() + " is not connected");
  }
  FacetList list;
  list.dimension = region.size() - 1;
  if (region.size() < 2) return list;

  const auto vertices = Vertices(region);
  const int target = list.dimension - 1;
  auto is_facet = [&](const std::vector<int>& tight) {
    return static_cast<int>(tight.size()) >= target + 1 &&
           AffineRankOf(vertices, tight, target) == target;
  };
  auto seen = [&](const std::vector<int>& tight) {
    return std::any_of(list.facets.begin(), list.facets.end(),
                       [&](const Facet& f) { return f.tight_vertices == tight; });
  };

  for (auto& candidate : CornerCandidates(region)) {
    auto tight = TightSet(candidate.inequality, vertices);
    if (!is_facet(tight) || seen(tight)) continue;
    list.facets.push_back({std::move(candidate.inequality), std::move(tight),
                           candidate.run_boundary, false});
  }

  // Completeness: every facet of the polytope is cut out by some inequality
  // of the full description.
  for (auto& ineq : HRep(region).inequalities) {
    auto tight = TightSet(ineq, vertices);
    if (!is_facet(tight) || seen(tight)) continue;
    list.facets.push_back({std::move(ineq), std::move(tight), std::nullopt, true});
  }
  SortFacets(list.facets);
  return list;
}

FacetList BlockFacets(const Region& region) {
  const auto components = Components(region);
  if (components.count() == 1) return Facets(region);

  const int n = region.size();
  const auto vertices = Vertices(region);
  FacetList list;
  list.dimension = n - components.count();
  for (const Block& block : components.blocks) {
    if (block.kind != BlockKind::kConnected) continue;
    const Region sub = BlockRegion(region, block);
    const int offset = block.first - 1;
    const int base_height = region.lower_height(offset);
    for (const Facet& local : Facets(sub).facets) {
      Facet global;
      global.run_boundary = local.run_boundary;
      global.recovered = local.recovered;
      const Inequality& li = local.inequality;
      switch (li.kind) {
        case InequalityKind::kLowerBound:
        case InequalityKind::kUpperBound:
          global.inequality =
              Bound(n, li.index + offset, li.kind == InequalityKind::kUpperBound);
          break;
        case InequalityKind::kUpperPrefix:
        case InequalityKind::kLowerPrefix:
          global.inequality =
              Prefix(n, li.index + offset, li.rhs + base_height,
                     li.kind == InequalityKind::kUpperPrefix);
          break;
        case InequalityKind::kAffineHull:
          continue;
      }
      global.tight_vertices = TightSet(global.inequality, vertices);
      list.facets.push_back(std::move(global));
    }
  }
  SortFacets(list.facets);
  return list;
}

long CatalanFacetCount(int n) { return 5L * n - 5; }

long KCatalanFacetCount(int r, int n) {
  return static_cast<long>(r + 1) * (2 * n - 3) + n - 2;
}

namespace {

PathWord Repeat(std::string_view unit, int times) {
  std::string word;
  for (int i = 0; i < times; ++i) word += unit;
  return PathWord::Parse(word);
}

}  // namespace

Region DyckRegion(int n) { return MakeRegion(BottomPath(n, n), Repeat("EN", n)); }

Region CatalanFacetRegion(int n) {
  return MakeRegion(BottomPath(n, n), Repeat("NE", n));
}

Region KCatalanRegion(int r, int n) {
  const std::string unit = "N" + std::string(r, 'E');
  return MakeRegion(BottomPath(r * (n - 1), n - 1), Repeat(unit, n - 1));
}

std::optional<std::pair<Region, Region>> Pinch(const Region& region,
                                               int prefix, int height) {
  const int n = region.size();
  if (prefix < 1 || prefix >= n) return std::nullopt;
  std::vector<int> lo_left(prefix + 1), hi_left(prefix + 1);
  for (int j = 0; j <= prefix; ++j) {
    lo_left[j] = region.lower_height(j);
    hi_left[j] = region.upper_height(j);
  }
  lo_left[prefix] = std::max(lo_left[prefix], height);
  hi_left[prefix] = std::min(hi_left[prefix], height);

  std::vector<int> lo_right(n - prefix + 1), hi_right(n - prefix + 1);
  for (int j = 0; j <= n - prefix; ++j) {
    lo_right[j] = region.lower_height(prefix + j) - height;
    hi_right[j] = region.upper_height(prefix + j) - height;
  }
  auto left = RegionFromBounds(std::move(lo_left), std::move(hi_left));
  auto right = RegionFromBounds(std::move(lo_right), std::move(hi_right));
  if (!left || !right) return std::nullopt;
  return std::make_pair(std::move(*left), std::move(*right));
}

FaceRegions FaceRegion(const Region& region, const Facet& facet) {
  const auto facets = BlockFacets(region);
  const bool member = std::any_of(
      facets.facets.begin(), facets.facets.end(), [&](const Facet& f) {
        return f.inequality.SameConstraint(facet.inequality);
      });
  if (!member) {
    throw Error(ErrorCode::kNotAFacet,
                facet.inequality.str() + " is not a facet of " + region.str());
  }
  const Inequality& ineq = facet.inequality;
  FaceRegions face;
  switch (ineq.kind) {
    case InequalityKind::kLowerBound:
    case InequalityKind::kUpperBound: {
      const int value = ineq.kind == InequalityKind::kUpperBound ? 1 : 0;
      face.parts.push_back(Delete(region, ineq.index, value));
      face.fixed = std::make_pair(ineq.index, value);
      break;
    }
    case InequalityKind::kUpperPrefix:
    case InequalityKind::kLowerPrefix: {
      auto parts = Pinch(region, ineq.index, ineq.rhs);
      if (!parts) {
        throw Error(ErrorCode::kNotAFacet, "pinch point is outside the region");
      }
      face.parts.push_back(std::move(parts->first));
      face.parts.push_back(std::move(parts->second));
      break;
    }
    case InequalityKind::kAffineHull:
      throw Error(ErrorCode::kNotAFacet, "the affine hull is not a facet");
  }
  return face;
}

std::vector<BasisVector> FaceVertices(const FaceRegions& face) {
  std::vector<BasisVector> out;
  if (face.fixed) {
    const auto [element, value] = *face.fixed;
    for (const auto& b : Bases(face.parts.front())) {
      auto coords = b.coords();
      coords.insert(coords.begin() + (element - 1),
                    static_cast<std::uint8_t>(value));
      out.emplace_back(std::move(coords));
    }
  } else {
    std::vector<std::vector<std::uint8_t>> acc{{}};
    for (const Region& part : face.parts) {
      std::vector<std::vector<std::uint8_t>> next;
      const auto part_bases = Bases(part);
      for (const auto& prefix : acc) {
        for (const auto& b : part_bases) {
          auto coords = prefix;
          coords.insert(coords.end(), b.coords().begin(), b.coords().end());
          next.push_back(std::move(coords));
        }
      }
      acc = std::move(next);
    }
    for (auto& coords : acc) out.emplace_back(std::move(coords));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpm
