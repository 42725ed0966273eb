#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lpm/decompose.hpp"
#include "lpm/oracle.hpp"
#include "lpm/polytope.hpp"
#include "lpm/volume_ehrhart.hpp"
#include "test_util.hpp"

namespace lpm {
namespace {

using testing::ErrorOf;
using testing::R;

// Permutations of [n] by descent set, counted directly.
long CountByDescents(int n, const std::vector<int>& descents) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  long count = 0;
  do {
    std::vector<int> d;
    for (int i = 0; i + 1 < n; ++i) {
      if (w[i] > w[i + 1]) d.push_back(i + 1);
    }
    count += d == descents;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

TEST(Descents, ExactCounts) {
  EXPECT_EQ(ExactDescentCount(3, std::vector<int>{}), 1);
  EXPECT_EQ(ExactDescentCount(3, std::vector<int>{1}), 2);
  EXPECT_EQ(ExactDescentCount(3, std::vector<int>{1, 2}), 1);
  for (int n = 1; n <= 7; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> d, complement;
      for (int i = 1; i < n; ++i) ((mask >> (i - 1)) & 1u ? d : complement).push_back(i);
      const BigInt count = ExactDescentCount(n, d);
      ASSERT_EQ(count, CountByDescents(n, d));
      ASSERT_EQ(count, ExactDescentCount(n, complement));
    }
  }
}

TEST(Descents, Eulerian) {
  EXPECT_EQ(Eulerian(1, 3), 1);
  EXPECT_EQ(Eulerian(2, 3), 4);
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) {
      total += Eulerian(k, n);
      EXPECT_EQ(Eulerian(k, n), oracle::BruteEulerian(k, n));
    }
    EXPECT_EQ(total, Factorial(n));
  }
}

TEST(Volume, StripVolumes) {
  EXPECT_EQ(StripVolume(StripFromDescents(1, {})), 1);
  EXPECT_EQ(StripVolume(StripFromDescents(3, {2})), 2);
  EXPECT_EQ(StripVolume(StripFromDescents(5, {})), 1);
}

TEST(Volume, Examples) {
  EXPECT_EQ(Volume(R("EENN", "NENE")), 2);
  EXPECT_EQ(Volume(R("EENN", "NNEE")), 4);
  EXPECT_EQ(Volume(R("EN", "NE")), 1);
  EXPECT_EQ(ErrorOf([] { Volume(R("EN", "EN")); }), ErrorCode::kDisconnectedRegion);
}

TEST(Volume, RectanglesAreEulerian) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const Region rect = MakeRegion(BottomPath(n - k, k), TopPath(n - k, k));
      ASSERT_EQ(Volume(rect), Eulerian(k, n - 1)) << k << "," << n;
    }
  }
}

TEST(Volume, StripVolumeIsFillingCount) {
  for (int len = 1; len <= 8; ++len) {
    for (unsigned mask = 0; mask < (1u << (len - 1)); ++mask) {
      std::vector<int> d;
      for (int i = 1; i < len; ++i) {
        if ((mask >> (i - 1)) & 1u) d.push_back(i);
      }
      const auto strip = StripFromDescents(len, d);
      ASSERT_EQ(StripVolume(strip), oracle::BruteSyt(strip));
    }
  }
}

TEST(CatalanArea, Values) {
  EXPECT_EQ(CatalanArea(1), Rational(1, 2));
  EXPECT_EQ(CatalanArea(2), Rational(3));
  EXPECT_EQ(CatalanArea(3), Rational(29, 2));
  const auto series = oracle::CatalanAreaSeries(10);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(CatalanAreaRecurrence(n), CatalanAreaClosedForm(n));
    if (n <= 10) EXPECT_EQ(CatalanArea(n), series[n]);
    if (n <= 7) EXPECT_EQ(CatalanArea(n), oracle::BruteCatalanArea(n));
  }
}

TEST(LatticePoints, Examples) {
  for (const Region& region : oracle::RegionSweep(4)) {
    EXPECT_EQ(CountLatticePoints(region, 0), 1);
  }
  EXPECT_EQ(CountLatticePoints(R("EN", "NE"), 3), 4);
  EXPECT_EQ(CountLatticePoints(R("EENN", "NNEE"), 1), 6);
}

TEST(LatticePoints, DpMatchesEnumeration) {
  for (const Region& region : oracle::RegionSweep(5)) {
    for (int t = 0; t <= 3; ++t) {
      ASSERT_EQ(CountLatticePoints(region, t), oracle::BruteLatticePoints(region, t))
          << region.str() << " t=" << t;
    }
  }
}

TEST(Ehrhart, Examples) {
  const auto segment = ComputeEhrhartPolynomial(R("EN", "NE"));
  EXPECT_EQ(segment.coeffs(), (std::vector<Rational>{1, 1}));

  const auto octahedron = ComputeEhrhartPolynomial(R("EENN", "NNEE"));
  EXPECT_EQ(octahedron.coeffs(),
            (std::vector<Rational>{1, Rational(7, 3), 2, Rational(2, 3)}));
  EXPECT_EQ(octahedron.Evaluate(1), 6);
  EXPECT_EQ(octahedron.NormalizedVolume(), 4);

  const auto l_poly = ComputeEhrhartPolynomial(R("EENN", "NENE"));
  EXPECT_EQ(l_poly.Evaluate(1), 5);
  EXPECT_EQ(l_poly.NormalizedVolume(), 2);
}

TEST(Ehrhart, SweepProperties) {
  for (const Region& region : oracle::RegionSweep(6)) {
    const auto poly = ComputeEhrhartPolynomial(region);
    ASSERT_EQ(poly.degree(), Dimension(region));
    ASSERT_EQ(poly.Evaluate(0), 1);
    ASSERT_EQ(poly.Evaluate(1), Rational(static_cast<long>(Bases(region).size())));
    for (int t = poly.degree() + 1; t <= poly.degree() + 2; ++t) {
      ASSERT_EQ(poly.Evaluate(t), Rational(CountLatticePoints(region, t)));
    }
    if (IsConnected(region)) ASSERT_EQ(poly.NormalizedVolume(), Volume(region));
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(GammaSet(R("EN", "NE")), (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(GammaSet(R("EENN", "NNEE")),
            (std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}}));
  const auto bounds = ComputeGammaBounds(R("EENN", "NNEE"));
  EXPECT_EQ(bounds.b, (std::vector<int>{1}));
  EXPECT_EQ(bounds.a, (std::vector<int>{3}));
}

TEST(Gamma, FoldedVectorsAreMembersSweep) {
  for (const Region& region : oracle::RegionSweep(7)) {
    if (region.r() == 0) continue;
    const auto gamma = GammaSet(region);
    const std::set<std::vector<int>> members(gamma.begin(), gamma.end());
    for (const auto& b : Bases(region)) {
      ASSERT_TRUE(members.contains(FoldedBlockVector(b))) << region.str() << " " << b.str();
    }
  }
}

TEST(Gamma, SSet) {
  EXPECT_EQ(SSet(1, 4), (std::vector<std::vector<int>>{{}}));
  EXPECT_EQ(SSet(2, 1), (std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(SSet(2, 2).size(), 6u);
}

TEST(Reconcile, EmitsEveryRow) {
  const auto rows = ReconcileEhrhartFormula(R("EN", "NE"), 3);
  ASSERT_EQ(rows.size(), 4u);
  const std::vector<long> truth{1, 2, 3, 4};
  const std::vector<long> formula{1, 3, 6, 10};
  for (int t = 0; t <= 3; ++t) {
    EXPECT_EQ(rows[t].t, t);
    EXPECT_EQ(rows[t].truth, truth[t]);
    EXPECT_EQ(rows[t].formula, formula[t]);
  }
  EXPECT_FALSE(rows[1].match());
  const auto square = ReconcileEhrhartFormula(R("EENN", "NNEE"), 1);
  EXPECT_EQ(square[0].truth, 1);
  EXPECT_EQ(square[1].truth, 6);
}

}  // namespace
}  // namespace lpm
