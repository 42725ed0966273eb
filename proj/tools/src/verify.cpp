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

#include "lpm_cli/verify.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

#include "lpm/decompose.hpp"
#include "lpm/error.hpp"
#include "lpm/matroid.hpp"
#include "lpm/oracle.hpp"
#include "lpm/polytope.hpp"
#include "lpm/triangulate.hpp"
#include "lpm/volume_ehrhart.hpp"

namespace lpm::cli {

void CheckResult::Fail(const std::string& what) {
  ++failures;
  if (samples.size() < 5) samples.push_back(what);
}

namespace {

// Runs body(region) for every region of the sweep, counting exceptions as
// failures.
template <typename Body>
CheckResult Sweep(const std::string& name, int max_size, bool connected_only,
                  Body body) {
  CheckResult result{name, 0, 0, {}};
  for (const Region& region : oracle::RegionSweep(max_size)) {
    if (connected_only && !IsConnected(region)) continue;
    ++result.cases;
    try {
      body(region, result);
    } catch (const std::exception& e) {
      result.Fail(region.str() + ": " + e.what());
    }
  }
  return result;
}

template <typename Body>
CheckResult Single(const std::string& name, Body body) {
  CheckResult result{name, 0, 0, {}};
  try {
    body(result);
  } catch (const std::exception& e) {
    result.Fail(e.what());
  }
  return result;
}

std::vector<oracle::Point> AsPoints(const std::vector<BasisVector>& bases) {
  std::vector<oracle::Point> out;
  for (const auto& b : bases) {
    out.emplace_back(b.coords().begin(), b.coords().end());
  }
  return out;
}

std::vector<std::vector<int>> AllSubsetsOf(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << std::max(n - 1, 0)); ++mask) {
    std::vector<int> d;
    for (int i = 0; i + 1 < n; ++i) {
      if ((mask >> i) & 1u) d.push_back(i + 1);
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Rational points with pairwise distinct prime denominators: no partial
// sum of consecutive coordinates is an integer.
RationalPoint GenericPoint(int dim, int sample) {
  static constexpr int kPrimes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37};
  RationalPoint x;
  for (int i = 0; i < dim; ++i) {
    const int p = kPrimes[i];
    const int numer = 1 + (sample * (2 * i + 3) + 5 * i) % (p - 1);
    x.emplace_back(numer, p);
  }
  return x;
}

// A point with y_{w(1)} < ... < y_{w(n)} strictly inside (0, 1).
RationalPoint ChamberPoint(const Permutation& w, int sample) {
  const int n = static_cast<int>(w.size());
  constexpr int kBlock = 97;
  RationalPoint y(n);
  for (int k = 0; k < n; ++k) {
    const int offset = 1 + (sample * (k + 3) + k) % (kBlock - 1);
    y[w[k] - 1] = Rational(k * kBlock + offset, (n + 1) * kBlock);
  }
  return y;
}

}  // namespace

CheckResult CheckBases(int max_size) {
  auto result = Sweep("bases", max_size, false, [](const Region& region,
                                                   CheckResult& r) {
    if (AsPoints(Bases(region)) != oracle::BruteBases(region)) {
      r.Fail(region.str() + ": bases differ from brute force");
    }
    if (region.lower() == BottomPath(region.m(), region.r()) &&
        region.upper() == TopPath(region.m(), region.r()) &&
        BigInt(Bases(region).size()) != Binomial(region.size(), region.r())) {
      r.Fail(region.str() + ": rectangle count is not binomial");
    }
  });
  return result;
}

CheckResult CheckDimension(int max_size) {
  return Sweep("dimension", max_size, false, [](const Region& region,
                                                CheckResult& r) {
    const int expected = oracle::AffineRank(oracle::BruteBases(region));
    if (Dimension(region) != expected) {
      r.Fail(region.str() + ": dimension " + std::to_string(Dimension(region)) +
             " vs affine rank " + std::to_string(expected));
    }
  });
}

CheckResult CheckComponents(int max_size) {
  return Sweep("components", std::min(max_size, 8), false,
               [](const Region& region, CheckResult& r) {
                 std::vector<std::vector<int>> blocks;
                 for (const auto& b : Components(region).blocks) {
                   std::vector<int> elems(b.size());
                   std::iota(elems.begin(), elems.end(), b.first);
                   blocks.push_back(std::move(elems));
                 }
                 if (blocks != oracle::BruteComponents(region)) {
                   r.Fail(region.str() + ": components differ from circuits");
                 }
               });
}

CheckResult CheckHRep(int max_size) {
  return Sweep("hrep", max_size, false, [](const Region& region,
                                           CheckResult& r) {
    const auto h = HRep(region);
    const int n = region.size();
    std::set<std::vector<std::uint8_t>> feasible;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::uint8_t> v(n);
      for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1u;
      const BasisVector point(v);
      bool ok = true;
      for (const auto& e : h.equalities) ok = ok && e.SatisfiedBy(point);
      for (const auto& e : h.inequalities) ok = ok && e.SatisfiedBy(point);
      if (ok) feasible.insert(v);
    }
    std::set<std::vector<std::uint8_t>> bases;
    for (const auto& b : Bases(region)) bases.insert(b.coords());
    if (feasible != bases) {
      r.Fail(region.str() + ": 0/1 solutions differ from bases");
    }
  });
}

CheckResult CheckEdges(int max_size) {
  return Sweep("edges", max_size, true, [](const Region& region,
                                           CheckResult& r) {
    const auto points = AsPoints(Vertices(region));
    if (points.size() > 40) return;
    std::set<Edge> expected;
    for (int a = 0; a < static_cast<int>(points.size()); ++a) {
      for (int b = a + 1; b < static_cast<int>(points.size()); ++b) {
        if (oracle::BruteAdjacent(points, a, b)) expected.insert({a, b});
      }
    }
    const auto edges = Edges(region);
    if (std::set<Edge>(edges.begin(), edges.end()) != expected) {
      r.Fail(region.str() + ": edge set differs from adjacency oracle");
    }
  });
}

CheckResult CheckEdgeArea(int max_size) {
  CheckResult result{"edge-area", 0, 0, {}};
  for (int n = 1; n <= max_size; ++n) {
    for (int m = 0; m <= n; ++m) {
      const PathWord lower = BottomPath(m, n - m);
      for (const Region& region : oracle::RegionsOfShape(m, n - m)) {
        if (region.lower() != lower) continue;
        ++result.cases;
        const long area = EdgeCountByArea(region);
        const long edges = static_cast<long>(Edges(region).size());
        if (area != edges) {
          result.Fail(region.str() + ": area sum " + std::to_string(area) +
                      " vs " + std::to_string(edges) + " edges");
        }
      }
    }
  }
  return result;
}

CheckResult CheckFacets(int max_size) {
  return Sweep("facets", max_size, false, [](const Region& region,
                                             CheckResult& r) {
    const FacetList list = BlockFacets(region);
    const auto vertices = Vertices(region);
    std::set<std::vector<int>> mine, truth;
    for (const auto& f : list.facets) {
      mine.insert(f.tight_vertices);
      for (const auto& v : vertices) {
        if (!f.inequality.SatisfiedBy(v)) {
          r.Fail(region.str() + ": " + f.inequality.str() + " cuts a vertex");
        }
      }
    }
    for (const auto& f : oracle::BruteFacets(region)) truth.insert(f.tight);
    if (mine != truth || mine.size() != list.facets.size()) {
      r.Fail(region.str() + ": facets differ from rank oracle");
    }
  });
}

CheckResult CheckFaces(int max_size) {
  return Sweep("faces", max_size, true, [](const Region& region,
                                           CheckResult& r) {
    const auto vertices = Vertices(region);
    for (const auto& facet : Facets(region).facets) {
      const auto face = FaceRegion(region, facet);
      std::vector<BasisVector> tight;
      for (int k : facet.tight_vertices) tight.push_back(vertices[k]);
      if (FaceVertices(face) != tight) {
        r.Fail(region.str() + ": face of " + facet.inequality.str() +
               " is not its tight set");
      }
    }
  });
}

namespace {

// Whether `subset` is a face of conv(vertices): empty, or the common tight
// set of the description's inequalities that are tight on all of it.
bool IsFace(const Region& region, const std::vector<BasisVector>& subset) {
  if (subset.empty()) return true;
  const auto vertices = Vertices(region);
  std::vector<bool> keep(vertices.size(), true);
  for (const auto& ineq : HRep(region).inequalities) {
    const bool on_subset = std::all_of(
        subset.begin(), subset.end(),
        [&](const BasisVector& v) { return ineq.TightOn(v); });
    if (!on_subset) continue;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if (!ineq.TightOn(vertices[k])) keep[k] = false;
    }
  }
  std::vector<BasisVector> exposed;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (keep[k]) exposed.push_back(vertices[k]);
  }
  return exposed == subset;
}

void CheckSplits(const DecompositionNode& node, CheckResult& r) {
  if (!node.split) return;
  const Region& region = node.region;
  const auto gp = SplitPartition(region, *node.split);
  if (gp.r1 + gp.r2 != region.r() + gp.a1 + gp.a2 || gp.a1 <= 0 ||
      gp.a1 >= gp.r1 || gp.a2 <= 0 || gp.a2 >= gp.r2) {
    r.Fail(region.str() + ": split thresholds break the rank identity");
  }
  const Region& left = node.children[0].region;
  const Region& right = node.children[1].region;
  if (Dimension(left) != Dimension(region) ||
      Dimension(right) != Dimension(region)) {
    r.Fail(region.str() + ": split child changes dimension");
  }
  std::set<BasisVector> joined;
  for (const auto& b : Bases(left)) joined.insert(b);
  for (const auto& b : Bases(right)) joined.insert(b);
  const auto parent = Bases(region);
  if (std::vector<BasisVector>(joined.begin(), joined.end()) != parent) {
    r.Fail(region.str() + ": split children do not cover the bases");
  }
  std::vector<BasisVector> shared;
  const auto right_bases = Bases(right);
  for (const auto& b : Bases(left)) {
    if (std::binary_search(right_bases.begin(), right_bases.end(), b)) {
      shared.push_back(b);
    }
  }
  if (!IsFace(left, shared) || !IsFace(right, shared)) {
    r.Fail(region.str() + ": split children do not meet in a face");
  }
  for (const auto& child : node.children) CheckSplits(child, r);
}

}  // namespace

CheckResult CheckDecomposition(int max_size) {
  return Sweep("decomposition", max_size, true, [](const Region& region,
                                                   CheckResult& r) {
    if (region.size() < 2) return;
    const DecompositionNode root = Decompose(region);
    auto leaves = Leaves(root);
    std::vector<Region> strips;
    BigInt strip_total = 0;
    for (const auto& s : BorderStrips(region)) {
      strips.push_back(StripRegion(s));
      strip_total += StripVolume(s);
    }
    std::sort(leaves.begin(), leaves.end());
    std::sort(strips.begin(), strips.end());
    if (leaves != strips) r.Fail(region.str() + ": leaves are not the strips");
    BigInt leaf_total = 0;
    for (const auto& leaf : leaves) leaf_total += Volume(leaf);
    if (leaf_total != Volume(region) || strip_total != Volume(region)) {
      r.Fail(region.str() + ": leaf volumes do not add up");
    }
    CheckSplits(root, r);
    if (region.size() <= 7) {
      for (std::size_t a = 0; a < leaves.size(); ++a) {
        const auto va = Bases(leaves[a]);
        for (std::size_t b = a + 1; b < leaves.size(); ++b) {
          const auto vb = Bases(leaves[b]);
          std::vector<BasisVector> common;
          std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                std::back_inserter(common));
          if (!IsFace(leaves[a], common) || !IsFace(leaves[b], common)) {
            r.Fail(region.str() + ": two leaves meet outside a common face");
          }
        }
      }
    }
  });
}

CheckResult CheckVolume(int max_size) {
  auto result = Sweep("volume", max_size, true, [](const Region& region,
                                                   CheckResult& r) {
    const BigInt v = Volume(region);
    const BigInt e = ComputeEhrhartPolynomial(region).NormalizedVolume();
    if (v != e) {
      r.Fail(region.str() + ": volume " + ToString(v) + " vs Ehrhart " +
             ToString(e));
    }
  });
  for (int n = 2; n <= max_size; ++n) {
    for (int k = 1; k < n; ++k) {
      ++result.cases;
      const Region rect =
          MakeRegion(BottomPath(n - k, k), TopPath(n - k, k));
      if (Volume(rect) != Eulerian(k, n - 1)) {
        result.Fail("rectangle (" + std::to_string(k) + "," +
                    std::to_string(n) + ") volume is not Eulerian");
      }
    }
  }
  return result;
}

CheckResult CheckStripVolume(int max_strip) {
  CheckResult result{"strip-volume", 0, 0, {}};
  for (int len = 1; len <= max_strip; ++len) {
    for (const auto& d : AllSubsetsOf(len)) {
      ++result.cases;
      const BorderStrip strip = StripFromDescents(len, d);
      if (StripVolume(strip) != oracle::BruteSyt(strip)) {
        result.Fail("strip " + strip.directions() + ": fillings differ");
      }
      const Region region = StripRegion(strip);
      const auto again = BorderStrips(region);
      if (!IsBorderStrip(region) || again.size() != 1 || again[0] != strip ||
          FindSplit(region)) {
        result.Fail("strip " + strip.directions() + ": region round trip");
      }
    }
  }
  return result;
}

CheckResult CheckEhrhart(int max_size) {
  return Sweep("ehrhart", max_size, false, [](const Region& region,
                                              CheckResult& r) {
    const EhrhartPolynomial poly = ComputeEhrhartPolynomial(region);
    if (poly.Evaluate(0) != 1 ||
        poly.Evaluate(1) != Rational(static_cast<long>(Bases(region).size()))) {
      r.Fail(region.str() + ": E(0) or E(1) wrong");
    }
    if (poly.degree() != Dimension(region)) {
      r.Fail(region.str() + ": degree differs from dimension");
    }
    for (int t = 0; t <= 2; ++t) {
      if (CountLatticePoints(region, t) != oracle::BruteLatticePoints(region, t)) {
        r.Fail(region.str() + ": lattice count at t=" + std::to_string(t));
      }
    }
  });
}

CheckResult CheckGamma(int max_size) {
  return Sweep("gamma", max_size, false, [](const Region& region,
                                            CheckResult& r) {
    if (region.r() == 0) return;
    const auto gamma = GammaSet(region);
    const std::set<std::vector<int>> members(gamma.begin(), gamma.end());
    for (const auto& b : Bases(region)) {
      if (!members.contains(FoldedBlockVector(b))) {
        r.Fail(region.str() + ": basis " + b.str() + " outside the arrays");
      }
    }
    const auto bounds = ComputeGammaBounds(region);
    for (std::size_t i = 0; i < bounds.a.size(); ++i) {
      if (bounds.b[i] > bounds.a[i]) r.Fail(region.str() + ": b > a");
    }
  });
}

CheckResult CheckDescents(int max_n) {
  return Single("descents", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      std::vector<BigInt> by_size(n, 0);
      for (const auto& d : AllSubsetsOf(n)) {
        ++r.cases;
        const BigInt count = ExactDescentCount(n, d);
        if (count != oracle::BruteDescentCount(n, d)) {
          r.Fail("descent count n=" + std::to_string(n));
        }
        std::vector<int> complement;
        for (int i = 1; i < n; ++i) {
          if (std::find(d.begin(), d.end(), i) == d.end()) complement.push_back(i);
        }
        if (ExactDescentCount(n, complement) != count) {
          r.Fail("complement symmetry n=" + std::to_string(n));
        }
        by_size[d.size()] += count;
      }
      BigInt total = 0;
      for (int k = 1; k <= n; ++k) {
        const BigInt a = Eulerian(k, n);
        if (a != oracle::BruteEulerian(k, n) || a != by_size[k - 1]) {
          r.Fail("Eulerian number A(" + std::to_string(k) + "," +
                 std::to_string(n) + ")");
        }
        total += a;
      }
      if (total != Factorial(n)) r.Fail("Eulerian row sum n=" + std::to_string(n));
    }
  });
}

CheckResult CheckHypersimplex(int max_n) {
  return Single("hypersimplex", [&](CheckResult& r) {
    for (int n = 2; n <= max_n; ++n) {
      std::vector<std::vector<SimplexCell>> by_k;
      long total = 0;
      for (int k = 1; k < n; ++k) {
        ++r.cases;
        by_k.push_back(HypersimplexTriangulation(k, n));
        const long count = TriangulationVolumeCheck(by_k.back());
        if (BigInt(count) != Eulerian(k, n - 1)) {
          r.Fail("hypersimplex (" + std::to_string(k) + "," +
                 std::to_string(n) + ") cell count");
        }
        for (const auto& cell : by_k.back()) {
          for (const auto& v : cell.ambient) {
            Rational sum = 0;
            for (const auto& c : v) sum += c;
            if (sum != k) r.Fail("cell vertex off the hypersimplex");
          }
        }
        total += count;
      }
      if (BigInt(total) != Factorial(n - 1)) {
        r.Fail("cube cell total n=" + std::to_string(n));
      }
      if (n > 6) continue;
      for (int sample = 0; sample < 40; ++sample) {
        const RationalPoint x = GenericPoint(n - 1, sample);
        int hits = 0;
        for (const auto& cells : by_k) {
          for (const auto& cell : cells) hits += CellContains(cell, x, true);
        }
        if (hits != 1) {
          r.Fail("sample point in " + std::to_string(hits) + " cells, n=" +
                 std::to_string(n));
        }
      }
    }
  });
}

CheckResult CheckStripTriangulation(int max_strip) {
  CheckResult result{"strip-triangulation", 0, 0, {}};
  for (int len = 1; len <= max_strip; ++len) {
    for (const auto& d : AllSubsetsOf(len)) {
      ++result.cases;
      try {
        const BorderStrip strip = StripFromDescents(len, d);
        const auto cells = StripTriangulation(strip);
        if (BigInt(TriangulationVolumeCheck(cells)) != StripVolume(strip)) {
          result.Fail("strip " + strip.directions() + ": cell count");
        }
        if (len > 6) continue;
        const auto bases = Bases(StripRegion(strip));
        for (const auto& cell : cells) {
          for (const auto& v : cell.ambient) {
            std::vector<std::uint8_t> coords;
            for (const auto& c : v) {
              coords.push_back(c == 1 ? 1 : 0);
              if (c != 0 && c != 1) result.Fail("non 0/1 cell vertex");
            }
            if (!std::binary_search(bases.begin(), bases.end(),
                                    BasisVector(coords))) {
              result.Fail("strip " + strip.directions() +
                          ": cell vertex is not a basis");
            }
          }
        }
      } catch (const std::exception& e) {
        result.Fail(e.what());
      }
    }
  }
  return result;
}

CheckResult CheckPsi(int max_dim) {
  return Single("psi", [&](CheckResult& r) {
    for (int n = 1; n <= max_dim; ++n) {
      Permutation w(n);
      std::iota(w.begin(), w.end(), 1);
      do {
        for (int sample = 0; sample < 10; ++sample) {
          ++r.cases;
          const RationalPoint y = ChamberPoint(w, sample);
          const RationalPoint x = PsiInverseOn(w, y);
          if (Psi(x) != y) r.Fail("psi round trip fails");
        }
      } while (std::next_permutation(w.begin(), w.end()));
    }
  });
}

CheckResult CheckCatalan(int max_n) {
  return Single("catalan", [&](CheckResult& r) {
    const auto series = oracle::CatalanAreaSeries(10);
    for (int n = 0; n <= 12; ++n) {
      ++r.cases;
      const Rational a = CatalanArea(n);
      if (n <= 10 && a != series[n]) r.Fail("area series n=" + std::to_string(n));
      if (n <= max_n && a != oracle::BruteCatalanArea(n)) {
        r.Fail("area enumeration n=" + std::to_string(n));
      }
    }
    for (int n = 1; n <= max_n; ++n) {
      ++r.cases;
      const Region dyck = DyckRegion(n);
      if (BigInt(static_cast<long>(Edges(dyck).size())) != CatalanEdgeFormula(n)) {
        r.Fail("edge formula n=" + std::to_string(n));
      }
      if (n >= 2 && (Dimension(dyck) != 2 * n - 3 ||
                     Components(dyck).count() != 3)) {
        r.Fail("Catalan dimension n=" + std::to_string(n));
      }
    }
  });
}

std::vector<CheckResult> VerifyAll(int max_size) {
  std::vector<CheckResult> out;
  out.push_back(CheckBases(max_size));
  out.push_back(CheckDimension(max_size));
  out.push_back(CheckComponents(max_size));
  out.push_back(CheckHRep(max_size));
  out.push_back(CheckEdges(max_size));
  out.push_back(CheckEdgeArea(max_size));
  auto facets = VerifyFacets(max_size);
  out.insert(out.end(), facets.begin(), facets.end());
  auto volume = VerifyVolume(max_size);
  out.insert(out.end(), volume.begin(), volume.end());
  out.push_back(CheckGamma(max_size));
  out.push_back(CheckDescents(std::min(max_size + 2, 8)));
  out.push_back(CheckHypersimplex(std::min(max_size + 1, 7)));
  out.push_back(CheckStripTriangulation(std::min(max_size, 7)));
  out.push_back(CheckPsi(std::min(max_size - 1, 5)));
  out.push_back(CheckCatalan(std::min(max_size + 1, 7)));
  return out;
}

std::vector<CheckResult> VerifyFacets(int max_size) {
  return {CheckFacets(max_size), CheckFaces(max_size)};
}

std::vector<CheckResult> VerifyVolume(int max_size) {
  return {CheckDecomposition(max_size), CheckVolume(max_size),
          CheckStripVolume(std::min(max_size, 8)), CheckEhrhart(max_size)};
}

std::vector<FormulaRow> EhrhartFormulaTable(int max_size, int t_max) {
  std::vector<FormulaRow> rows;
  for (const Region& region : oracle::RegionSweep(max_size)) {
    if (!IsConnected(region)) continue;
    for (const auto& row : ReconcileEhrhartFormula(region, t_max)) {
      rows.push_back({region, row.t, row.formula, row.truth});
    }
  }
  return rows;
}

}  // namespace lpm::cli
