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

// Stanley's piecewise-linear map on the unit cube and the unimodular
// triangulations it induces on hypersimplices and border-strip polytopes.

#ifndef LPM_TRIANGULATE_HPP_
#define LPM_TRIANGULATE_HPP_

#include <span>
#include <vector>

#include "lpm/decompose.hpp"
#include "lpm/numeric.hpp"

namespace lpm {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;
using RationalPoint = std::vector<Rational>;

Permutation Inverse(const Permutation& w);
// Positions i (1-based) with w(i) > w(i+1).
std::vector<int> DescentPositions(const Permutation& w);

// Fractional parts of the prefix sums.
RationalPoint Psi(const RationalPoint& x);

// The affine inverse of Psi on the closed chamber y_{w(1)} <= ... <=
// y_{w(n)}. Throws Error(kWrongChamber) if y is outside it.
RationalPoint PsiInverseOn(const Permutation& w, const RationalPoint& y);

struct SimplexCell {
  Permutation label;
  // Cell vertices in the reduced coordinates (last ambient coordinate
  // dropped), one more vertex than the dimension.
  std::vector<RationalPoint> vertices;
  // The same vertices with the last coordinate restored from the affine
  // hull sum.
  std::vector<RationalPoint> ambient;
};

// Cells w in S_{n-1} with k-1 descents of w^{-1}, in lexicographic order.
// Throws Error(kBadK) unless 1 <= k <= n-1.
std::vector<SimplexCell> HypersimplexTriangulation(int k, int n);

// Cells w in S_l whose inverse has exactly the strip's descent set.
std::vector<SimplexCell> StripTriangulation(const BorderStrip& strip);

// det of the rows v_i - v_0.
Rational CellDeterminant(const SimplexCell& cell);

// Sum of |det| over the cells, which is their count when every cell is
// unimodular. Throws Error(kNonUnimodularCell) otherwise.
long TriangulationVolumeCheck(std::span<const SimplexCell> cells);

// Barycentric test in the reduced coordinates. `strict` requires every
// barycentric coordinate to be positive.
bool CellContains(const SimplexCell& cell, const RationalPoint& point,
                  bool strict);

}  // namespace lpm

#endif  // LPM_TRIANGULATE_HPP_
