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

#include "lpm_cli/errata.hpp"

#include <algorithm>
#include <set>

#include "lpm/decompose.hpp"
#include "lpm/matroid.hpp"
#include "lpm/oracle.hpp"
#include "lpm/polytope.hpp"
#include "lpm/volume_ehrhart.hpp"
#include "lpm_cli/verify.hpp"

namespace lpm::cli {

std::string VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConfirmed: return "confirmed";
    case Verdict::kErratum: return "erratum";
    case Verdict::kBoundaryCase: return "boundary-case";
  }
  return "unknown";
}

namespace {

Rational Catalan(int n) { return Rational(Binomial(2 * n, n), n + 1); }

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

ErrataEntry EdgeClosedForm() {
  std::vector<std::string> stated, computed;
  bool agree = true;
  for (int n = 1; n <= 7; ++n) {
    const Rational printed = CatalanEdgeFormulaAsStated(n);
    const long edges = static_cast<long>(Edges(DyckRegion(n)).size());
    stated.push_back(ToString(printed));
    computed.push_back(std::to_string(edges));
    agree = agree && printed == Rational(edges);
  }
  return {"catalan-edge-closed-form",
          "a(n) = (n^2/2) C_n - 4^n/2 - binom(2n+2,n+1)/4: " + Join(stated),
          "enumerated edges n=1..7: " + Join(computed),
          agree ? Verdict::kConfirmed : Verdict::kErratum,
          "corrected form (n^2/2) C_n - 4^n/2 + binom(2n+2,n+1)/4 matches "
          "every enumerated count"};
}

ErrataEntry AreaRecurrence() {
  // A_{n+1} = 2 sum (k+1/2) C_k C_{n-k} + sum A_k C_{n-k} + sum A_{n-k} C_k
  std::vector<Rational> printed{Rational(0)};
  for (int n = 0; n < 7; ++n) {
    Rational next = 0;
    for (int k = 0; k <= n; ++k) {
      next += 2 * (Rational(k) + Rational(1, 2)) * Catalan(k) * Catalan(n - k);
      next += printed[k] * Catalan(n - k) + printed[n - k] * Catalan(k);
    }
    printed.push_back(next);
  }
  std::vector<std::string> stated, computed;
  bool agree = true;
  for (int n = 1; n <= 7; ++n) {
    stated.push_back(ToString(printed[n]));
    computed.push_back(ToString(CatalanArea(n)));
    agree = agree && printed[n] == CatalanArea(n);
  }
  return {"catalan-area-recurrence",
          "first recurrence, A_1..A_7: " + Join(stated),
          "enumerated areas A_1..A_7: " + Join(computed),
          agree ? Verdict::kConfirmed : Verdict::kErratum,
          "the second recurrence and the closed form 4^n/2 - "
          "binom(2n+2,n+1)/4 both match enumeration"};
}

ErrataEntry DimensionIntersections(int max_size) {
  long regions = 0, stated_hits = 0, corrected_hits = 0;
  std::string first;
  for (const Region& region : oracle::RegionSweep(max_size)) {
    ++regions;
    const int k = static_cast<int>(IntersectionVertices(region).size());
    const int dim = Dimension(region);
    if (region.size() - k + 2 == dim) {
      ++stated_hits;
    } else if (first.empty()) {
      first = region.str() + " has dimension " + std::to_string(dim) +
              ", formula gives " + std::to_string(region.size() - k + 2);
    }
    if (region.size() - k + 1 == dim) ++corrected_hits;
  }
  return {"dimension-intersection-count", "dim = m + r - k + 2",
          "m + r - k + 1 holds on " + std::to_string(corrected_hits) + "/" +
              std::to_string(regions) + " regions",
          stated_hits == regions ? Verdict::kConfirmed : Verdict::kErratum,
          "stated form holds on " + std::to_string(stated_hits) + "/" +
              std::to_string(regions) + "; first counterexample " + first};
}

ErrataEntry DimensionComponents(int max_size) {
  long regions = 0, hits = 0;
  for (const Region& region : oracle::RegionSweep(std::min(max_size, 8))) {
    ++regions;
    const int rank = oracle::AffineRank(oracle::BruteBases(region));
    const int c = static_cast<int>(oracle::BruteComponents(region).size());
    if (rank == region.size() - c) ++hits;
  }
  bool catalan = true;
  for (int n = 2; n <= 6; ++n) {
    const Region dyck = DyckRegion(n);
    catalan = catalan && Dimension(dyck) == 2 * n - 3 &&
              Components(dyck).count() == 3;
  }
  return {"dimension-components", "dim = n - c(M); Catalan: 3 components, 2n-3",
          "affine rank = n - (circuit classes) on " + std::to_string(hits) +
              "/" + std::to_string(regions) + " regions",
          hits == regions && catalan ? Verdict::kConfirmed : Verdict::kErratum,
          catalan ? "Catalan regions n=2..6 have 3 components and dimension 2n-3"
                  : "Catalan dimension check failed"};
}

// The hyperplanes listed with the facet count, as (coeffs, rhs) of <= form.
std::vector<std::pair<std::vector<int>, int>> ListedCatalanHyperplanes(int n) {
  const int size = 2 * n;
  std::vector<std::pair<std::vector<int>, int>> out;
  for (int i = 3; i <= size; ++i) {
    std::vector<int> c(size, 0);
    c[i - 1] = 1;
    out.emplace_back(c, 1);
  }
  for (int i = 1; i <= size; ++i) {
    std::vector<int> c(size, 0);
    c[i - 1] = -1;
    out.emplace_back(c, 0);
  }
  for (int k = 2; k <= n; ++k) {
    std::vector<int> c(size, 0);
    std::fill(c.begin(), c.begin() + (2 * k - 2), 1);
    out.emplace_back(c, k - 1);
  }
  return out;
}

std::vector<ErrataEntry> CatalanFacets() {
  std::vector<ErrataEntry> out;
  for (int n = 2; n <= 6; ++n) {
    const FacetList list = Facets(CatalanFacetRegion(n));
    std::set<std::pair<std::vector<int>, int>> facets;
    for (const auto& f : list.facets) facets.insert(f.inequality.AsLessEqual());
    const auto listed = ListedCatalanHyperplanes(n);
    long listed_facets = 0;
    for (const auto& h : listed) listed_facets += facets.contains(h);
    const long count = static_cast<long>(list.facets.size());
    const long claimed = CatalanFacetCount(n);
    ErrataEntry e{"catalan-facet-count",
                  "n=" + std::to_string(n) + ": " + std::to_string(claimed) +
                      " facets",
                  std::to_string(count) + " facets",
                  count == claimed ? Verdict::kConfirmed : Verdict::kErratum,
                  "the accompanying hyperplane list has " +
                      std::to_string(listed.size()) + " entries, " +
                      std::to_string(listed_facets) + " of them facets"};
    if (count == claimed && n == 2) e.verdict = Verdict::kBoundaryCase;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ErrataEntry> KCatalanFacets() {
  std::vector<ErrataEntry> out;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 2; n <= 4; ++n) {
      const long count =
          static_cast<long>(Facets(KCatalanRegion(r, n)).facets.size());
      const long claimed = KCatalanFacetCount(r, n);
      out.push_back({"kcatalan-facet-count",
                     "r=" + std::to_string(r) + " n=" + std::to_string(n) +
                         ": (r+1)(2n-3)+n-2 = " + std::to_string(claimed),
                     std::to_string(count) + " facets",
                     count == claimed ? Verdict::kConfirmed : Verdict::kErratum,
                     count == claimed ? "" : "rank oracle agrees with computed count"});
    }
  }
  return out;
}

void CountGoodSplits(const DecompositionNode& node, long& splits, long& good,
                     std::string& first) {
  if (!node.split) return;
  ++splits;
  if (VerifyGoodPartition(node.region, SplitPartition(node.region, *node.split))) {
    ++good;
  } else if (first.empty()) {
    first = node.region.str() + " at x=" + std::to_string(node.split->x) +
            ", j=" + std::to_string(node.split->j);
  }
  for (const auto& child : node.children) CountGoodSplits(child, splits, good, first);
}

ErrataEntry GoodPartitionSplits(int max_size) {
  long splits = 0, good = 0;
  std::string first;
  for (const Region& region : oracle::RegionSweep(std::min(max_size, 7))) {
    if (!IsConnected(region) || region.size() < 2) continue;
    CountGoodSplits(Decompose(region), splits, good, first);
  }
  return {"good-partition-split",
          "({1..x}, {x+1..n}) with r1-a1 = j, r2-a2 = r-j is a good partition",
          "independence condition holds on " + std::to_string(good) + "/" +
              std::to_string(splits) + " decomposition splits",
          good == splits ? Verdict::kConfirmed : Verdict::kErratum,
          "the rank identity holds on every split and every split is a valid "
          "hyperplane split; first split failing the independence condition " +
              first};
}

ErrataEntry GammaOrientation(int max_size) {
  long regions = 0, printed_ok = 0, swapped_ok = 0;
  for (const Region& region : oracle::RegionSweep(max_size)) {
    if (region.r() < 2) continue;
    ++regions;
    const auto bounds = ComputeGammaBounds(region);
    bool printed = true, swapped = true;
    for (const auto& b : Bases(region)) {
      const auto alpha = FoldedBlockVector(b);
      int sum = 0;
      for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
        sum += alpha[i];
        printed = printed && bounds.a[i] <= sum && sum <= bounds.b[i];
        swapped = swapped && bounds.b[i] <= sum && sum <= bounds.a[i];
      }
    }
    printed_ok += printed;
    swapped_ok += swapped;
  }
  return {"gamma-bound-orientation", "a_i <= alpha_1+...+alpha_i <= b_i",
          "b_i <= alpha_1+...+alpha_i <= a_i admits every basis on " +
              std::to_string(swapped_ok) + "/" + std::to_string(regions) +
              " regions",
          printed_ok == regions ? Verdict::kConfirmed : Verdict::kErratum,
          "printed orientation admits every basis on " +
              std::to_string(printed_ok) + "/" + std::to_string(regions) +
              " regions with r >= 2"};
}

ErrataEntry GammaCount(int max_size) {
  long regions = 0, hits = 0;
  std::string first;
  for (const Region& region : oracle::RegionSweep(max_size)) {
    if (region.r() == 0) continue;
    ++regions;
    const auto gamma = GammaSet(region).size();
    const auto points = Bases(region).size();
    if (gamma == points) {
      ++hits;
    } else if (first.empty()) {
      first = region.str() + ": |Gamma| = " + std::to_string(gamma) +
              ", lattice points = " + std::to_string(points);
    }
  }
  return {"gamma-lattice-point-count", "lattice points of P = |Gamma(P,Q)|",
          "equal on " + std::to_string(hits) + "/" + std::to_string(regions) +
              " regions",
          hits == regions ? Verdict::kConfirmed : Verdict::kErratum,
          first.empty() ? "" : "first counterexample " + first};
}

ErrataEntry EhrhartDoubleSum(int max_size) {
  const auto rows = EhrhartFormulaTable(std::min(max_size, 6), 3);
  long matches = 0;
  std::set<Region> failing;
  for (const auto& row : rows) {
    if (row.match()) {
      ++matches;
    } else {
      failing.insert(row.region);
    }
  }
  std::string first;
  for (const auto& row : rows) {
    if (!row.match()) {
      first = row.region.str() + " t=" + std::to_string(row.t) + ": formula " +
              ToString(row.formula) + ", count " + ToString(row.truth);
      break;
    }
  }
  return {"ehrhart-double-sum",
          "E(t) = sum over Gamma x S_r(t) of multiset coefficient products",
          std::to_string(matches) + "/" + std::to_string(rows.size()) +
              " (region, t) rows match, t = 0..3",
          matches == static_cast<long>(rows.size()) ? Verdict::kConfirmed
                                                    : Verdict::kErratum,
          std::to_string(failing.size()) + " regions disagree somewhere" +
              (first.empty() ? "" : "; first " + first)};
}

}  // namespace

std::vector<ErrataEntry> ErrataReport(int max_size) {
  std::vector<ErrataEntry> out;
  out.push_back(EdgeClosedForm());
  out.push_back(AreaRecurrence());
  out.push_back(DimensionIntersections(max_size));
  out.push_back(DimensionComponents(max_size));
  for (auto& e : CatalanFacets()) out.push_back(std::move(e));
  for (auto& e : KCatalanFacets()) out.push_back(std::move(e));
  out.push_back(GoodPartitionSplits(max_size));
  out.push_back(GammaOrientation(max_size));
  out.push_back(GammaCount(max_size));
  out.push_back(EhrhartDoubleSum(max_size));
  return out;
}

nlohmann::json ErrataToJson(const std::vector<ErrataEntry>& entries) {
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    out.push_back({{"id", e.id},
                   {"stated", e.stated},
                   {"computed", e.computed},
                   {"verdict", VerdictName(e.verdict)},
                   {"detail", e.detail}});
  }
  return out;
}

}  // namespace lpm::cli
