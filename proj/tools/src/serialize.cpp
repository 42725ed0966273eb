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

#include "lpm_cli/serialize.hpp"

#include <stdexcept>

#include "lpm/matroid.hpp"

namespace lpm::cli {

Json RegionToJson(const Region& region) {
  return Json{{"lower", region.lower().str()}, {"upper", region.upper().str()}};
}

Region RegionFromJson(const Json& doc) {
  if (!doc.is_object() || !doc.contains("lower") || !doc.contains("upper") ||
      !doc["lower"].is_string() || !doc["upper"].is_string()) {
    throw std::invalid_argument(
        "region document needs string fields \"lower\" and \"upper\"");
  }
  return MakeRegion(doc["lower"].get<std::string>(),
                    doc["upper"].get<std::string>());
}

std::string KindName(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::kAffineHull: return "affine_hull";
    case InequalityKind::kLowerBound: return "lower_bound";
    case InequalityKind::kUpperBound: return "upper_bound";
    case InequalityKind::kUpperPrefix: return "upper_prefix";
    case InequalityKind::kLowerPrefix: return "lower_prefix";
  }
  return "unknown";
}

Json BasesToJson(const Region& region) {
  Json bases = Json::array();
  Json vectors = Json::array();
  for (const auto& b : Bases(region)) {
    bases.push_back(b.support());
    vectors.push_back(b.str());
  }
  return Json{{"region", RegionToJson(region)},
              {"count", bases.size()},
              {"bases", std::move(bases)},
              {"vectors", std::move(vectors)}};
}

Json DimensionToJson(const Region& region) {
  Json blocks = Json::array();
  for (const auto& block : Components(region).blocks) {
    blocks.push_back({{"first", block.first},
                      {"last", block.last},
                      {"kind", std::string(BlockKindName(block.kind))}});
  }
  Json points = Json::array();
  for (const auto& p : IntersectionVertices(region)) points.push_back({p.x, p.y});
  return Json{{"region", RegionToJson(region)},
              {"ground_size", region.size()},
              {"dimension", Dimension(region)},
              {"components", std::move(blocks)},
              {"intersection_vertices", std::move(points)}};
}

Json EdgesToJson(const Region& region) {
  Json vectors = Json::array();
  for (const auto& b : Vertices(region)) vectors.push_back(b.str());
  Json edges = Json::array();
  for (const auto& [a, b] : Edges(region)) edges.push_back({a, b});
  Json doc{{"region", RegionToJson(region)},
           {"vertices", std::move(vectors)},
           {"count", edges.size()},
           {"edges", std::move(edges)}};
  if (region.lower() == BottomPath(region.m(), region.r())) {
    doc["area_count"] = EdgeCountByArea(region);
  }
  return doc;
}

Json InequalityToJson(const Inequality& ineq) {
  auto [coeffs, rhs] = ineq.AsLessEqual();
  return Json{{"coeffs", coeffs},
              {"rel", ineq.rel == Relation::kEqual ? "=" : "<="},
              {"rhs", rhs},
              {"kind", KindName(ineq.kind)},
              {"index", ineq.index},
              {"label", ineq.str()}};
}

namespace {

std::vector<int> TightOn(const Inequality& ineq,
                         const std::vector<BasisVector>& vertices) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) {
    if (ineq.TightOn(vertices[k])) out.push_back(k);
  }
  return out;
}

}  // namespace

Json HRepToJson(const Region& region) {
  const auto vertices = Vertices(region);
  const auto h = HRep(region);
  Json equalities = Json::array();
  for (const auto& eq : h.equalities) {
    Json e = InequalityToJson(eq);
    e["tight_vertices"] = TightOn(eq, vertices);
    equalities.push_back(std::move(e));
  }
  Json inequalities = Json::array();
  for (const auto& ineq : h.inequalities) {
    Json e = InequalityToJson(ineq);
    e["tight_vertices"] = TightOn(ineq, vertices);
    inequalities.push_back(std::move(e));
  }
  return Json{{"region", RegionToJson(region)},
              {"equalities", std::move(equalities)},
              {"inequalities", std::move(inequalities)}};
}

Json FacetsToJson(const Region& region) {
  const FacetList list = BlockFacets(region);
  Json facets = Json::array();
  for (const auto& f : list.facets) {
    Json e = InequalityToJson(f.inequality);
    e["tight_vertices"] = f.tight_vertices;
    e["run_boundary"] = f.run_boundary ? Json(*f.run_boundary) : Json(nullptr);
    e["recovered"] = f.recovered;
    facets.push_back(std::move(e));
  }
  return Json{{"region", RegionToJson(region)},
              {"dimension", list.dimension},
              {"count", facets.size()},
              {"facets", std::move(facets)}};
}

Json DecompositionToJson(const DecompositionNode& node) {
  Json doc{{"region", RegionToJson(node.region)}};
  if (node.split) {
    doc["split"] = {{"x", node.split->x}, {"j", node.split->j}};
    Json children = Json::array();
    for (const auto& child : node.children) {
      children.push_back(DecompositionToJson(child));
    }
    doc["children"] = std::move(children);
  } else {
    doc["strip"] = node.strip->directions();
    doc["descents"] = node.strip->descents;
    doc["volume"] = ToString(StripVolume(*node.strip));
  }
  return doc;
}

Json VolumeToJson(const Region& region) {
  return Json{{"volume_normalized", ToString(Volume(region))}};
}

Json EhrhartToJson(const Region& region, int t_max) {
  const EhrhartPolynomial poly = ComputeEhrhartPolynomial(region);
  if (t_max < 0) t_max = poly.degree() + 2;
  Json coeffs = Json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(ToString(c));
  Json values = Json::object();
  for (int t = 0; t <= t_max; ++t) {
    values[std::to_string(t)] = ToString(CountLatticePoints(region, t));
  }
  return Json{{"coeffs", std::move(coeffs)},
              {"volume_normalized", ToString(poly.NormalizedVolume())},
              {"values", std::move(values)}};
}

Json CellsToJson(std::span<const SimplexCell> cells) {
  Json out = Json::array();
  for (const auto& cell : cells) {
    auto points = [](const std::vector<RationalPoint>& pts) {
      Json rows = Json::array();
      for (const auto& p : pts) {
        Json row = Json::array();
        for (const auto& c : p) row.push_back(ToString(c));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    out.push_back({{"perm", cell.label},
                   {"vertices", points(cell.vertices)},
                   {"ambient", points(cell.ambient)},
                   {"det", boost::multiprecision::numerator(
                               CellDeterminant(cell))
                               .convert_to<long>()}});
  }
  return out;
}

}  // namespace lpm::cli
