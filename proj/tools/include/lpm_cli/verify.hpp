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

// Exhaustive agreement sweeps between the library and the brute-force
// oracles, and the Ehrhart reconciliation table.

#ifndef LPM_CLI_VERIFY_HPP_
#define LPM_CLI_VERIFY_HPP_

#include <string>
#include <vector>

#include "lpm/lattice_path.hpp"
#include "lpm/numeric.hpp"

namespace lpm::cli {

struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> samples;  // first few failing cases

  bool passed() const { return failures == 0; }
  void Fail(const std::string& what);
};

// Each sweep covers every region with at most max_size steps (connected
// ones where the check needs it).
CheckResult CheckBases(int max_size);
CheckResult CheckDimension(int max_size);
CheckResult CheckComponents(int max_size);
CheckResult CheckHRep(int max_size);
CheckResult CheckEdges(int max_size);
CheckResult CheckEdgeArea(int max_size);
CheckResult CheckFacets(int max_size);
CheckResult CheckFaces(int max_size);
CheckResult CheckDecomposition(int max_size);
CheckResult CheckVolume(int max_size);
CheckResult CheckStripVolume(int max_strip);
CheckResult CheckEhrhart(int max_size);
CheckResult CheckGamma(int max_size);
CheckResult CheckDescents(int max_n);
CheckResult CheckHypersimplex(int max_n);
CheckResult CheckStripTriangulation(int max_strip);
CheckResult CheckPsi(int max_dim);
CheckResult CheckCatalan(int max_n);

std::vector<CheckResult> VerifyAll(int max_size);
std::vector<CheckResult> VerifyFacets(int max_size);
std::vector<CheckResult> VerifyVolume(int max_size);

struct FormulaRow {
  Region region;
  int t = 0;
  BigInt formula;
  BigInt truth;
  bool match() const { return formula == truth; }
};

// Reconciliation rows for every connected region up to max_size, t = 0..t_max.
std::vector<FormulaRow> EhrhartFormulaTable(int max_size, int t_max);

}  // namespace lpm::cli

#endif  // LPM_CLI_VERIFY_HPP_
