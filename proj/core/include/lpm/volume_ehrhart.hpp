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

// Normalized volume, Eulerian numbers, Catalan areas, lattice point counts
// of dilations and the Ehrhart polynomial. Everything is exact.

#ifndef LPM_VOLUME_EHRHART_HPP_
#define LPM_VOLUME_EHRHART_HPP_

#include <functional>
#include <span>
#include <vector>

#include "lpm/decompose.hpp"
#include "lpm/lattice_path.hpp"
#include "lpm/matroid.hpp"
#include "lpm/numeric.hpp"

namespace lpm {

// Permutations of [n] whose descent set is exactly `descents` (a subset of
// 1..n-1), by inclusion-exclusion over multinomials.
BigInt ExactDescentCount(int n, std::span<const int> descents);

// Standard fillings of the strip: ExactDescentCount(length, descents).
BigInt StripVolume(const BorderStrip& strip);

// Sum of strip volumes over BorderStrips(region). Throws
// Error(kDisconnectedRegion).
BigInt Volume(const Region& region);

// Permutations of [n] with k-1 descents; 0 outside 1 <= k <= n (except
// A(1, 0) = 1).
BigInt Eulerian(int k, int n);

// Total area between the diagonal y = x and the Dyck paths to (n, n).
Rational CatalanAreaRecurrence(int n);
Rational CatalanAreaClosedForm(int n);
// Both routes; throws logic_error if they disagree.
Rational CatalanArea(int n);

// |t P ∩ Z^n| by a prefix-sum DP.
BigInt CountLatticePoints(const Region& region, int t);

class EhrhartPolynomial {
 public:
  explicit EhrhartPolynomial(std::vector<Rational> coeffs);

  // c_0..c_d.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational Evaluate(long t) const;
  // d! * c_d.
  BigInt NormalizedVolume() const;

 private:
  std::vector<Rational> coeffs_;
};

// Interpolates counts at t = 0..d and confirms t = d+1, d+2 (logic_error
// otherwise).
EhrhartPolynomial ComputeEhrhartPolynomial(const Region& region);

// a[k-1] + 1 = min{i : p_i >= k+1}, b[k-1] + 1 = min{i : q_i >= k+1}, for
// k = 1..r-1.
struct GammaBounds {
  std::vector<int> a;
  std::vector<int> b;
};

GammaBounds ComputeGammaBounds(const Region& region);

// Compositions of m+r into r positive parts whose partial sums lie in
// [b_i, a_i], in lexicographic order.
std::vector<std::vector<int>> GammaSet(const Region& region);

// Block sizes of a basis: part i counts positions between the i-th and the
// (i+1)-th chosen element, with everything before the second one in the
// first part.
std::vector<int> FoldedBlockVector(const BasisVector& basis);

// Nonnegative arrays of length 2(r-1) with s_1 <= t, s_last <= t and
// neighbouring sums at most t, in lexicographic order.
void ForEachSArray(int r, int t,
                   const std::function<void(std::span<const int>)>& visit);
std::vector<std::vector<int>> SSet(int r, int t);

// The closed double sum over GammaSet x SSet of products of multiset
// coefficients.
BigInt EhrhartFormulaValue(const Region& region, int t);

struct ReconcileRow {
  int t = 0;
  BigInt formula;
  BigInt truth;
  bool match() const { return formula == truth; }
};

// Rows for t = 0..t_max.
std::vector<ReconcileRow> ReconcileEhrhartFormula(const Region& region,
                                                  int t_max);

}  // namespace lpm

#endif  // LPM_VOLUME_EHRHART_HPP_
