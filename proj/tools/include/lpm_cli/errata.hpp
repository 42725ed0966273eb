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

// Reconciliation of published closed forms against computed ground truth.

#ifndef LPM_CLI_ERRATA_HPP_
#define LPM_CLI_ERRATA_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace lpm::cli {

enum class Verdict { kConfirmed, kErratum, kBoundaryCase };

std::string VerdictName(Verdict verdict);

struct ErrataEntry {
  std::string id;
  std::string stated;
  std::string computed;
  Verdict verdict = Verdict::kConfirmed;
  std::string detail;
};

// Claim ids, in report order:
//   catalan-edge-closed-form, catalan-area-recurrence,
//   dimension-intersection-count, dimension-components,
//   catalan-facet-count (one entry per n), kcatalan-facet-count (one per
//   (r, n)), good-partition-split, gamma-bound-orientation, gamma-lattice-point-count,
//   ehrhart-double-sum.
// Sweeps cover regions with at most max_size steps.
std::vector<ErrataEntry> ErrataReport(int max_size);

nlohmann::json ErrataToJson(const std::vector<ErrataEntry>& entries);

}  // namespace lpm::cli

#endif  // LPM_CLI_ERRATA_HPP_
