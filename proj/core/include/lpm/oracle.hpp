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

// Brute-force ground truth. Nothing here calls into the matroid, polytope,
// decompose, volume or triangulation code; only the region and strip types
// are shared.

#ifndef LPM_ORACLE_HPP_
#define LPM_ORACLE_HPP_

#include <vector>

#include "lpm/decompose.hpp"
#include "lpm/lattice_path.hpp"
#include "lpm/numeric.hpp"

namespace lpm::oracle {

using Point = std::vector<int>;

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix FromRows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[i * cols_ + j]; }

  int Rank() const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

// Affine rank of a point set (rank of differences to the first point).
int AffineRank(const std::vector<Point>& points);

// 0/1 incidence vectors of the r-subsets whose path stays in the region,
// in lexicographic order. Throws Error(kTooLarge) beyond 12 elements.
std::vector<Point> BruteBases(const Region& region);

// Whether vertices[i] and vertices[j] span an edge of their convex hull:
// no point of the line through them lies in the hull of the other
// vertices, decided by an exact phase-one simplex. Throws Error(kTooLarge)
// beyond 40 vertices.
bool BruteAdjacent(const std::vector<Point>& vertices, int i, int j);

// {x >= 0 : A x = b} is nonempty. Exact, Bland's rule.
bool Feasible(const std::vector<std::vector<Rational>>& a,
              const std::vector<Rational>& b);

struct BruteFacet {
  std::vector<int> coeffs;  // coeffs . x <= rhs
  int rhs = 0;
  std::vector<int> tight;   // indices into BruteBases(region)
};

// Inequalities of the full prefix/box description whose tight vertices
// have affine rank dim - 1, one per tight set. Throws Error(kTooLarge)
// beyond 9 elements.
std::vector<BruteFacet> BruteFacets(const Region& region);

// Fillings of the strip by 1..l increasing along rows and decreasing up
// columns. Throws Error(kTooLarge) beyond 9 boxes.
BigInt BruteSyt(const BorderStrip& strip);

// Classes of "lie on a common circuit", each sorted, ordered by first
// element. Throws Error(kTooLarge) beyond 8 elements.
std::vector<std::vector<int>> BruteComponents(const Region& region);

// Integer points of t times the polytope, by enumeration of {0..t}^n.
BigInt BruteLatticePoints(const Region& region, int t);

BigInt BruteDescentCount(int n, const std::vector<int>& descents);
BigInt BruteEulerian(int k, int n);

// Sum over Dyck paths to (n, n) of the area between path and diagonal.
Rational BruteCatalanArea(int n);

// Coefficients 0..order of (1 - 2t - sqrt(1 - 4t)) / (4t (1 - 4t)).
std::vector<Rational> CatalanAreaSeries(int order);

// Every region with 1 <= m + r <= max_size, ordered by size, then (m, r),
// then (lower, upper).
std::vector<Region> RegionSweep(int max_size);
// Regions with exactly m East and r North steps.
std::vector<Region> RegionsOfShape(int m, int r);

}  // namespace lpm::oracle

#endif  // LPM_ORACLE_HPP_
