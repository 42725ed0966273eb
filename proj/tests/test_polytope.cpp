#include <gtest/gtest.h>

#include <set>

#include "lpm/oracle.hpp"
#include "lpm/polytope.hpp"
#include "test_util.hpp"

namespace lpm {
namespace {

using testing::ErrorOf;
using testing::R;
using testing::VectorStrings;

std::vector<std::string> Labels(const FacetList& list) {
  std::vector<std::string> out;
  for (const auto& f : list.facets) out.push_back(f.inequality.str());
  return out;
}

const Facet& FacetNamed(const FacetList& list, const std::string& label) {
  for (const auto& f : list.facets) {
    if (f.inequality.str() == label) return f;
  }
  throw std::runtime_error("no facet " + label);
}

TEST(Polytope, Vertices) {
  EXPECT_EQ(Vertices(R("EENN", "NENE")).size(), 5u);
  EXPECT_EQ(Vertices(R("EENN", "NNEE")).size(), 6u);
  EXPECT_EQ(Vertices(R("EN", "EN")).size(), 1u);
}

TEST(Polytope, Dimension) {
  EXPECT_EQ(Dimension(R("EENN", "NENE")), 3);
  EXPECT_EQ(Dimension(R("EENN", "NNEE")), 3);
  EXPECT_EQ(Dimension(R("EN", "EN")), 0);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(Dimension(DyckRegion(n)), 2 * n - 3);
}

TEST(Polytope, DimensionIsAffineRankSweep) {
  for (const Region& region : oracle::RegionSweep(8)) {
    ASSERT_EQ(Dimension(region), oracle::AffineRank(oracle::BruteBases(region)))
        << region.str();
  }
}

TEST(Polytope, Edges) {
  EXPECT_EQ(Edges(R("EENN", "NENE")).size(), 8u);
  EXPECT_EQ(Edges(R("EN", "NE")).size(), 1u);
  EXPECT_EQ(Edges(R("EENN", "NNEE")).size(), 12u);
}

TEST(Polytope, EdgesMatchAdjacencyOracle) {
  for (const Region& region : oracle::RegionSweep(6)) {
    if (!IsConnected(region)) continue;
    std::vector<oracle::Point> points;
    for (const auto& v : Vertices(region)) points.emplace_back(v.coords().begin(), v.coords().end());
    std::set<Edge> expected;
    for (int a = 0; a < static_cast<int>(points.size()); ++a) {
      for (int b = a + 1; b < static_cast<int>(points.size()); ++b) {
        if (oracle::BruteAdjacent(points, a, b)) expected.insert({a, b});
      }
    }
    const auto edges = Edges(region);
    ASSERT_EQ(std::set<Edge>(edges.begin(), edges.end()), expected) << region.str();
  }
}

TEST(Polytope, EdgeCountByArea) {
  EXPECT_EQ(EdgeCountByArea(R("EENN", "NENE")), 8);
  EXPECT_EQ(EdgeCountByArea(R("EN", "NE")), 1);
  EXPECT_EQ(EdgeCountByArea(DyckRegion(3)), 8);
  EXPECT_EQ(ErrorOf([] { EdgeCountByArea(R("ENEN", "NNEE")); }),
            ErrorCode::kNotGeneralizedCatalan);
}

TEST(Polytope, CatalanEdgeFormula) {
  const std::vector<long> values{0, 1, 8, 47, 244, 1186, 5536};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(CatalanEdgeFormula(n), values[n - 1]);
    EXPECT_EQ(CatalanEdgeFormula(n), BigInt(static_cast<long>(Edges(DyckRegion(n)).size())));
  }
  // The form with the opposite sign on the binomial term disagrees everywhere.
  for (int n = 1; n <= 7; ++n) {
    EXPECT_NE(CatalanEdgeFormulaAsStated(n), Rational(values[n - 1]));
  }
}

TEST(Polytope, HRepExamples) {
  std::set<std::string> labels;
  for (const auto& ineq : HRep(R("EENN", "NENE")).inequalities) labels.insert(ineq.str());
  EXPECT_TRUE(labels.contains("x1 + x2 <= 1"));
  EXPECT_TRUE(labels.contains("x1 + x2 + x3 >= 1"));

  const auto segment = HRep(R("EN", "NE"));
  ASSERT_EQ(segment.equalities.size(), 1u);
  EXPECT_EQ(segment.equalities[0].str(), "x1 + x2 = 1");
  std::set<std::string> box;
  for (const auto& ineq : segment.inequalities) {
    if (ineq.kind == InequalityKind::kLowerBound || ineq.kind == InequalityKind::kUpperBound) {
      box.insert(ineq.str());
    }
  }
  EXPECT_EQ(box, (std::set<std::string>{"x1 >= 0", "x1 <= 1", "x2 >= 0", "x2 <= 1"}));

  // Prefix constraints of the rectangle hold for every 0/1 point with the
  // right sum, so none of them cuts anything.
  const Region square = R("EENN", "NNEE");
  for (const auto& ineq : HRep(square).inequalities) {
    if (ineq.kind != InequalityKind::kUpperPrefix && ineq.kind != InequalityKind::kLowerPrefix) {
      continue;
    }
    for (const auto& v : Vertices(square)) EXPECT_TRUE(ineq.SatisfiedBy(v));
    EXPECT_TRUE(std::none_of(Facets(square).facets.begin(), Facets(square).facets.end(),
                             [&](const Facet& f) { return f.inequality.SameConstraint(ineq); }));
  }
}

TEST(Polytope, FacetExamples) {
  EXPECT_EQ(Labels(Facets(R("EENN", "NENE"))),
            (std::vector<std::string>{"x1 >= 0", "x2 >= 0", "x3 <= 1", "x4 <= 1",
                                      "x1 + x2 <= 1"}));
  EXPECT_EQ(Labels(Facets(R("EN", "NE"))), (std::vector<std::string>{"x1 >= 0", "x2 >= 0"}));
  const auto octahedron = Facets(R("EENN", "NNEE"));
  EXPECT_EQ(octahedron.facets.size(), 8u);
  EXPECT_EQ(octahedron.dimension, 3);
  EXPECT_EQ(ErrorOf([] { Facets(R("EN", "EN")); }), ErrorCode::kDisconnectedRegion);
}

std::set<std::vector<int>> TightSets(const FacetList& list) {
  std::set<std::vector<int>> out;
  for (const auto& f : list.facets) out.insert(f.tight_vertices);
  return out;
}

TEST(Polytope, FacetsMatchRankOracleSweep) {
  for (const Region& region : oracle::RegionSweep(7)) {
    std::set<std::vector<int>> truth;
    for (const auto& f : oracle::BruteFacets(region)) truth.insert(f.tight);
    const auto list = BlockFacets(region);
    ASSERT_EQ(TightSets(list), truth) << region.str();
    ASSERT_EQ(list.facets.size(), truth.size()) << region.str();
    if (IsConnected(region)) ASSERT_EQ(TightSets(Facets(region)), truth);
  }
}

TEST(Polytope, CatalanFacetCounts) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(CatalanFacetCount(n), 5 * n - 5);
    EXPECT_EQ(static_cast<long>(Facets(CatalanFacetRegion(n)).facets.size()), 5 * n - 5);
  }
}

TEST(Polytope, KCatalanFacetCounts) {
  // Computed counts for r = 1..3 and n = 2..4.
  const long computed[3][3] = {{2, 5, 10}, {3, 10, 17}, {4, 13, 22}};
  for (int r = 1; r <= 3; ++r) {
    for (int n = 2; n <= 4; ++n) {
      const Region region = KCatalanRegion(r, n);
      EXPECT_EQ(static_cast<long>(Facets(region).facets.size()), computed[r - 1][n - 2]);
      if (region.size() <= 9) {
        EXPECT_EQ(oracle::BruteFacets(region).size(),
                  static_cast<std::size_t>(computed[r - 1][n - 2]));
      }
    }
  }
  EXPECT_EQ(KCatalanFacetCount(1, 3), 7);
  EXPECT_EQ(KCatalanFacetCount(2, 2), 3);
  EXPECT_EQ(KCatalanFacetCount(1, 2), 2);
}

TEST(Polytope, FaceRegionExamples) {
  const Region l_region = R("EENN", "NENE");
  const auto facets = Facets(l_region);

  const auto pinched = FaceRegion(l_region, FacetNamed(facets, "x1 + x2 <= 1"));
  EXPECT_EQ(pinched.parts.size(), 2u);
  EXPECT_EQ(VectorStrings(FaceVertices(pinched)),
            (std::vector<std::string>{"0101", "0110", "1001", "1010"}));

  const auto deleted = FaceRegion(l_region, FacetNamed(facets, "x4 <= 1"));
  ASSERT_EQ(deleted.parts.size(), 1u);
  EXPECT_EQ(deleted.parts[0].size(), 3);
  EXPECT_EQ(VectorStrings(FaceVertices(deleted)),
            (std::vector<std::string>{"0011", "0101", "1001"}));

  const Region segment = R("EN", "NE");
  const auto point = FaceRegion(segment, FacetNamed(Facets(segment), "x1 >= 0"));
  EXPECT_EQ(FaceVertices(point).size(), 1u);

  Facet bogus = facets.facets.front();
  bogus.inequality.rhs += 1;
  EXPECT_EQ(ErrorOf([&] { FaceRegion(l_region, bogus); }), ErrorCode::kNotAFacet);
}

TEST(Polytope, FacesAreTightSetsSweep) {
  for (const Region& region : oracle::RegionSweep(6)) {
    if (!IsConnected(region) || region.size() < 2) continue;
    const auto vertices = Vertices(region);
    for (const auto& f : Facets(region).facets) {
      std::vector<BasisVector> tight;
      for (int k : f.tight_vertices) tight.push_back(vertices[k]);
      ASSERT_EQ(FaceVertices(FaceRegion(region, f)), tight)
          << region.str() << " " << f.inequality.str();
    }
  }
}

TEST(Polytope, Pinch) {
  const auto parts = Pinch(R("EENN", "NNEE"), 2, 1);
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first.size() + parts->second.size(), 4);
  EXPECT_FALSE(Pinch(R("EENN", "NENE"), 2, 2).has_value());
}

}  // namespace
}  // namespace lpm
