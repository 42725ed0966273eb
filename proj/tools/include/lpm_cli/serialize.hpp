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

// JSON documents for the lpm verbs. Object keys come out sorted; big
// integers and rationals are decimal strings.

#ifndef LPM_CLI_SERIALIZE_HPP_
#define LPM_CLI_SERIALIZE_HPP_

#include <span>
#include <string>

#include "json.hpp"
#include "lpm/decompose.hpp"
#include "lpm/lattice_path.hpp"
#include "lpm/polytope.hpp"
#include "lpm/triangulate.hpp"
#include "lpm/volume_ehrhart.hpp"

namespace lpm::cli {

using Json = nlohmann::json;

// {"lower": "EENN", "upper": "NENE"}
Json RegionToJson(const Region& region);
// Throws Error from path parsing, or std::invalid_argument for a document
// without string fields "lower" and "upper".
Region RegionFromJson(const Json& doc);

std::string KindName(InequalityKind kind);

Json BasesToJson(const Region& region);
Json DimensionToJson(const Region& region);
Json EdgesToJson(const Region& region);
Json InequalityToJson(const Inequality& ineq);
Json HRepToJson(const Region& region);
Json FacetsToJson(const Region& region);
Json DecompositionToJson(const DecompositionNode& node);
Json VolumeToJson(const Region& region);
// t_max < 0 means d + 2.
Json EhrhartToJson(const Region& region, int t_max);
Json CellsToJson(std::span<const SimplexCell> cells);

}  // namespace lpm::cli

#endif  // LPM_CLI_SERIALIZE_HPP_
