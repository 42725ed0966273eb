#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lpm/decompose.hpp"
#include "lpm/triangulate.hpp"
#include "lpm/volume_ehrhart.hpp"
#include "test_util.hpp"

namespace lpm {
namespace {

using testing::ErrorOf;

RationalPoint P(std::initializer_list<Rational> values) { return RationalPoint(values); }

TEST(Psi, Examples) {
  EXPECT_EQ(Psi(P({Rational(1, 2), Rational(1, 4)})), P({Rational(1, 2), Rational(3, 4)}));
  EXPECT_EQ(Psi(P({Rational(3, 4), Rational(1, 2)})), P({Rational(3, 4), Rational(1, 4)}));
  EXPECT_EQ(Psi(P({0, 0, 0})), P({0, 0, 0}));
}

TEST(Psi, InverseExamples) {
  EXPECT_EQ(PsiInverseOn({1, 2}, P({Rational(1, 4), Rational(1, 2)})),
            P({Rational(1, 4), Rational(1, 4)}));
  EXPECT_EQ(PsiInverseOn({2, 1}, P({Rational(3, 4), Rational(1, 4)})),
            P({Rational(3, 4), Rational(1, 2)}));
  // On the chamber boundary the affine inverse picks a corner preimage.
  EXPECT_EQ(PsiInverseOn({3, 1, 2}, P({0, 0, 0})), P({0, 0, 1}));
  EXPECT_EQ(Psi(P({0, 0, 1})), P({0, 0, 0}));
  EXPECT_EQ(ErrorOf([] { PsiInverseOn({1, 2}, P({Rational(3, 4), Rational(1, 4)})); }),
            ErrorCode::kWrongChamber);
}

TEST(Psi, RoundTripOnChambers) {
  for (int n = 1; n <= 5; ++n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      for (int sample = 1; sample <= 25; ++sample) {
        RationalPoint y(n);
        for (int k = 0; k < n; ++k) {
          y[w[k] - 1] = Rational(k * 50 + 1 + (sample * (k + 7)) % 49, (n + 1) * 50);
        }
        const auto x = PsiInverseOn(w, y);
        ASSERT_EQ(Psi(x), y);
        for (const auto& c : x) ASSERT_TRUE(c >= 0 && c <= 1);
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST(Permutations, InverseAndDescents) {
  EXPECT_EQ(Inverse({2, 3, 1}), (Permutation{3, 1, 2}));
  EXPECT_EQ(DescentPositions({3, 1, 2}), (std::vector<int>{1}));
  EXPECT_EQ(DescentPositions({1, 2, 3}), (std::vector<int>{}));
}

TEST(Hypersimplex, CellCounts) {
  EXPECT_EQ(HypersimplexTriangulation(1, 3).size(), 1u);
  EXPECT_EQ(HypersimplexTriangulation(2, 4).size(), 4u);
  EXPECT_EQ(HypersimplexTriangulation(2, 5).size(), 11u);
  EXPECT_EQ(ErrorOf([] { HypersimplexTriangulation(0, 4); }), ErrorCode::kBadK);
  EXPECT_EQ(ErrorOf([] { HypersimplexTriangulation(4, 4); }), ErrorCode::kBadK);
}

TEST(Hypersimplex, UnimodularAndEulerian) {
  for (int n = 2; n <= 7; ++n) {
    long total = 0;
    for (int k = 1; k < n; ++k) {
      const auto cells = HypersimplexTriangulation(k, n);
      for (const auto& cell : cells) {
        const Rational det = CellDeterminant(cell);
        ASSERT_TRUE(det == 1 || det == -1);
      }
      const long count = TriangulationVolumeCheck(cells);
      ASSERT_EQ(BigInt(count), Eulerian(k, n - 1));
      total += count;
    }
    EXPECT_EQ(BigInt(total), Factorial(n - 1));
  }
}

TEST(Hypersimplex, GenericPointsLieInOneCell) {
  const int n = 5;
  std::vector<std::vector<SimplexCell>> by_k;
  for (int k = 1; k < n; ++k) by_k.push_back(HypersimplexTriangulation(k, n));
  const int primes[] = {7, 11, 13, 17};
  for (int sample = 0; sample < 30; ++sample) {
    RationalPoint x;
    for (int i = 0; i < n - 1; ++i) {
      x.emplace_back(1 + (sample * (i + 2) + 3 * i) % (primes[i] - 1), primes[i]);
    }
    int hits = 0;
    for (const auto& cells : by_k) {
      for (const auto& cell : cells) hits += CellContains(cell, x, true);
    }
    ASSERT_EQ(hits, 1);
  }
}

TEST(StripTriangulationTest, Examples) {
  EXPECT_EQ(StripTriangulation(StripFromDescents(1, {})).size(), 1u);
  EXPECT_EQ(StripTriangulation(StripFromDescents(3, {2})).size(), 2u);
  EXPECT_EQ(StripTriangulation(StripFromDescents(3, {})).size(), 1u);
  EXPECT_EQ(TriangulationVolumeCheck(HypersimplexTriangulation(2, 4)), 4);
  EXPECT_EQ(TriangulationVolumeCheck(StripTriangulation(BorderStrips(MakeRegion("EENN", "NENE")).front())), 2);
  EXPECT_EQ(TriangulationVolumeCheck(std::vector<SimplexCell>{}), 0);
}

TEST(StripTriangulationTest, CountIsStripVolume) {
  for (int len = 1; len <= 7; ++len) {
    for (unsigned mask = 0; mask < (1u << (len - 1)); ++mask) {
      std::vector<int> d;
      for (int i = 1; i < len; ++i) {
        if ((mask >> (i - 1)) & 1u) d.push_back(i);
      }
      const auto strip = StripFromDescents(len, d);
      ASSERT_EQ(BigInt(TriangulationVolumeCheck(StripTriangulation(strip))),
                StripVolume(strip));
    }
  }
}

}  // namespace
}  // namespace lpm
