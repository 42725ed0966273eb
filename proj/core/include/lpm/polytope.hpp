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

// The matroid polytope conv{e_B} of a region: vertices, dimension, edges,
// the prefix-sum inequality description and its minimal facet subset, and
// faces realised again as regions.

#ifndef LPM_POLYTOPE_HPP_
#define LPM_POLYTOPE_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpm/lattice_path.hpp"
#include "lpm/matroid.hpp"
#include "lpm/numeric.hpp"

namespace lpm {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

enum class InequalityKind {
  kAffineHull,   // x_1 + ... + x_n = r
  kLowerBound,   // x_i >= 0
  kUpperBound,   // x_i <= 1
  kUpperPrefix,  // x_1 + ... + x_i <= q_i
  kLowerPrefix,  // x_1 + ... + x_i >= p_i
};

struct Inequality {
  std::vector<int> coeffs;
  Relation rel = Relation::kLessEqual;
  int rhs = 0;
  InequalityKind kind = InequalityKind::kLowerBound;
  // Element for box bounds, prefix length for prefix constraints.
  int index = 0;

  long Evaluate(const BasisVector& v) const;
  bool SatisfiedBy(const BasisVector& v) const;
  bool TightOn(const BasisVector& v) const { return Evaluate(v) == rhs; }

  // Same half-space written as coeffs . x <= rhs (or "=" for equalities).
  std::pair<std::vector<int>, int> AsLessEqual() const;

  // "x1 + x2 <= 1"
  std::string str() const;

  bool SameConstraint(const Inequality& other) const {
    return coeffs == other.coeffs && rel == other.rel && rhs == other.rhs;
  }
};

struct HRepresentation {
  std::vector<Inequality> equalities;
  std::vector<Inequality> inequalities;
};

// Every prefix constraint p_i <= x_1+...+x_i <= q_i (1 <= i < n), every box
// bound, and the affine hull equation.
HRepresentation HRep(const Region& region);

std::vector<BasisVector> Vertices(const Region& region);

// (m + r) - c(M).
int Dimension(const Region& region);

// Rank of {v - points[0]} computed by fraction-free integer elimination.
int AffineRank(std::span<const BasisVector> points);
int AffineRank(std::span<const BasisVector> points,
               std::span<const int> subset);

// Unordered vertex pairs (indices into Vertices(region), i < j) whose
// incidence vectors differ by e_i - e_j; lexicographic order.
using Edge = std::pair<int, int>;
std::vector<Edge> Edges(const Region& region);

// Sum of AreaBelow over the region's paths. Lower path must be E^m N^r,
// otherwise Error(kNotGeneralizedCatalan).
long EdgeCountByArea(const Region& region);

// Edges of the n-th Catalan matroid polytope: (n^2/2) C_n - A_n with
// A_n = 4^n/2 - binom(2n+2, n+1)/4.
BigInt CatalanEdgeFormula(int n);

// The closed form with the A_n term's signs as printed in the literature:
// (n^2/2) C_n - 4^n/2 - binom(2n+2, n+1)/4. Kept for the errata report.
Rational CatalanEdgeFormulaAsStated(int n);

struct Facet {
  Inequality inequality;
  std::vector<int> tight_vertices;  // indices into Vertices(region)
  // 1-based run-boundary number k for prefix facets produced by the corner
  // analysis (x_1+...+x_{beta_1+...+beta_2k} or x_1+...+x_{alpha_1+...+
  // alpha_2k}); absent for box bounds.
  std::optional<int> run_boundary;
  // True when the facet was missed by the corner/box case analysis and only
  // found by the completeness sweep over the full inequality description.
  bool recovered = false;
};

struct FacetList {
  int dimension = 0;
  std::vector<Facet> facets;
  int recovered_count() const;
};

// Facets of a connected region. Candidates come from the corner case
// analysis (upper prefix facets at the EN corners of Q, lower prefix facets
// at the NE corners of P, and box bounds not implied by those), are pruned
// by tight-vertex affine rank, and the result is certified complete against
// HRep. Throws Error(kDisconnectedRegion).
FacetList Facets(const Region& region);

// Facets of any region: per connected block, re-embedded in the ambient
// coordinates (prefix facets use global prefix sums).
FacetList BlockFacets(const Region& region);

// 5n - 5, claimed for (E^n N^n, (NE)^n).
long CatalanFacetCount(int n);
// (r+1)(2n-3) + n - 2, claimed for (E^{r(n-1)} N^{n-1}, (N E^r)^{n-1}).
long KCatalanFacetCount(int r, int n);

// (E^n N^n, (EN)^n): all paths to (n, n) weakly below the diagonal.
Region DyckRegion(int n);
// (E^n N^n, (NE)^n).
Region CatalanFacetRegion(int n);
// (E^{r(n-1)} N^{n-1}, (N E^r)^{n-1}).
Region KCatalanRegion(int r, int n);

// A facet's face as lattice path matroid(s). Prefix facets pinch both
// boundary paths through one lattice point and give two regions whose
// direct sum is the face; box bounds give the single region
// Delete(region, i, value).
struct FaceRegions {
  std::vector<Region> parts;
  // (element, value) for box-bound facets.
  std::optional<std::pair<int, int>> fixed;
};

// Throws Error(kNotAFacet) if `facet` is not among BlockFacets(region).
FaceRegions FaceRegion(const Region& region, const Facet& facet);

// Bases of the face lifted back to the parent's coordinates, sorted.
std::vector<BasisVector> FaceVertices(const FaceRegions& face);

// The two regions obtained by forcing height `height` after `prefix` steps.
// Returns nullopt if no path of `region` passes through that point.
std::optional<std::pair<Region, Region>> Pinch(const Region& region,
                                               int prefix, int height);

}  // namespace lpm

#endif  // LPM_POLYTOPE_HPP_
