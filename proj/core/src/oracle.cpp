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

#include "lpm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "lpm/error.hpp"

namespace lpm::oracle {

namespace {

void RequireAtMost(int value, int cap, const char* what) {
  if (value > cap) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + " " +
                                          std::to_string(value) +
                                          " exceeds the cap " +
                                          std::to_string(cap));
  }
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

RationalMatrix RationalMatrix::FromRows(
    const std::vector<std::vector<Rational>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

int RationalMatrix::Rank() const {
  RationalMatrix m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = rank;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (int c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    for (int row = rank + 1; row < rows_; ++row) {
      if (m.at(row, col) == 0) continue;
      const Rational f = m.at(row, col) / m.at(rank, col);
      for (int c = col; c < cols_; ++c) m.at(row, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

int AffineRank(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<Rational> row;
    for (std::size_t c = 0; c < points[k].size(); ++c) {
      row.emplace_back(points[k][c] - points[0][c]);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return 0;
  return RationalMatrix::FromRows(rows).Rank();
}

std::vector<Point> BruteBases(const Region& region) {
  const int n = region.size();
  const int r = region.r();
  RequireAtMost(n, 12, "ground set size");
  std::vector<Point> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    Point v(n);
    int height = 0;
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      v[i] = (mask >> i) & 1u;
      height += v[i];
      inside = region.lower().height(i + 1) <= height &&
               height <= region.upper().height(i + 1);
    }
    if (inside) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Feasible(const std::vector<std::vector<Rational>>& a,
              const std::vector<Rational>& b) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return true;
  const int n = static_cast<int>(a.front().size());
  const int width = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  std::vector<Rational> rhs(m);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j] * sign;
    t[i][n + i] = 1;
    rhs[i] = b[i] * sign;
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(width, Rational(0));
  Rational value = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) cost[j] -= t[i][j];
    value += rhs[i];
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = rhs[i] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    rhs[leave] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = cost[enter];
    for (int j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    value += f * rhs[leave];
    basis[leave] = enter;
  }
  return value == 0;
}

bool BruteAdjacent(const std::vector<Point>& vertices, int i, int j) {
  RequireAtMost(static_cast<int>(vertices.size()), 40, "vertex count");
  const int dim = static_cast<int>(vertices[i].size());
  std::vector<int> others;
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) {
    if (k != i && k != j) others.push_back(k);
  }
  if (others.empty()) return true;
  // Unknowns: a weight per other vertex, then s+ and s-. Rows: one per
  // coordinate of  sum w_k v_k - (s+ - s-)(v_j - v_i) = v_i, and sum w = 1.
  const int cols = static_cast<int>(others.size()) + 2;
  std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(cols));
  std::vector<Rational> b(dim + 1);
  for (int c = 0; c < dim; ++c) {
    for (std::size_t k = 0; k < others.size(); ++k) {
      a[c][k] = vertices[others[k]][c];
    }
    const int direction = vertices[j][c] - vertices[i][c];
    a[c][cols - 2] = -direction;
    a[c][cols - 1] = direction;
    b[c] = vertices[i][c];
  }
  for (std::size_t k = 0; k < others.size(); ++k) a[dim][k] = 1;
  b[dim] = 1;
  return !Feasible(a, b);
}

std::vector<BruteFacet> BruteFacets(const Region& region) {
  const int n = region.size();
  RequireAtMost(n, 9, "ground set size");
  const auto vertices = BruteBases(region);
  const int dim = AffineRank(vertices);

  std::vector<BruteFacet> system;
  for (int i = 0; i < n; ++i) {
    BruteFacet f{std::vector<int>(n, 0), 0, {}};
    f.coeffs[i] = -1;
    system.push_back(f);
  }
  for (int i = 0; i < n; ++i) {
    BruteFacet f{std::vector<int>(n, 0), 1, {}};
    f.coeffs[i] = 1;
    system.push_back(f);
  }
  for (int i = 1; i < n; ++i) {
    BruteFacet f{std::vector<int>(n, 0), region.upper().height(i), {}};
    std::fill(f.coeffs.begin(), f.coeffs.begin() + i, 1);
    system.push_back(f);
  }
  for (int i = 1; i < n; ++i) {
    BruteFacet f{std::vector<int>(n, 0), -region.lower().height(i), {}};
    std::fill(f.coeffs.begin(), f.coeffs.begin() + i, -1);
    system.push_back(f);
  }

  std::vector<BruteFacet> out;
  std::set<std::vector<int>> seen;
  for (auto& f : system) {
    std::vector<Point> tight_points;
    for (int k = 0; k < static_cast<int>(vertices.size()); ++k) {
      const int lhs = std::inner_product(f.coeffs.begin(), f.coeffs.end(),
                                         vertices[k].begin(), 0);
      if (lhs == f.rhs) {
        f.tight.push_back(k);
        tight_points.push_back(vertices[k]);
      }
    }
    if (tight_points.empty() || AffineRank(tight_points) != dim - 1) continue;
    if (!seen.insert(f.tight).second) continue;
    out.push_back(std::move(f));
  }
  return out;
}

BigInt BruteSyt(const BorderStrip& strip) {
  const int len = strip.length();
  RequireAtMost(len, 9, "strip length");
  std::vector<int> labels(len);
  std::iota(labels.begin(), labels.end(), 1);
  BigInt count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < len && ok; ++a) {
      for (int b = 0; b < len && ok; ++b) {
        const Box& x = strip.boxes[a];
        const Box& y = strip.boxes[b];
        if (x.row == y.row && x.col < y.col) ok = labels[a] < labels[b];
        if (x.col == y.col && x.row < y.row) ok = labels[a] > labels[b];
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return count;
}

std::vector<std::vector<int>> BruteComponents(const Region& region) {
  const int n = region.size();
  RequireAtMost(n, 8, "ground set size");
  std::vector<bool> independent(1u << n, false);
  for (const auto& v : BruteBases(region)) {
    unsigned mask = 0;
    for (int i = 0; i < n; ++i) {
      if (v[i]) mask |= 1u << i;
    }
    for (unsigned sub = mask;; sub = (sub - 1) & mask) {
      independent[sub] = true;
      if (sub == 0) break;
    }
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (independent[mask]) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if ((mask >> i) & 1u) minimal = independent[mask ^ (1u << i)];
    }
    if (!minimal) continue;
    const int first = std::countr_zero(mask);
    for (int i = first + 1; i < n; ++i) {
      if ((mask >> i) & 1u) parent[find(i)] = find(first);
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[find(i)].push_back(i + 1);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt BruteLatticePoints(const Region& region, int t) {
  const int n = region.size();
  double space = 1;
  for (int i = 0; i < n; ++i) space *= t + 1;
  RequireAtMost(space > 5e6 ? 5000001 : static_cast<int>(space), 5000000,
                "search space");
  std::vector<int> x(n, 0);
  BigInt count = 0;
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == n) {
      if (sum == t * region.r()) ++count;
      return;
    }
    for (int v = 0; v <= t; ++v) {
      const int s = sum + v;
      if (s < t * region.lower().height(i + 1)) continue;
      if (s > t * region.upper().height(i + 1)) break;
      self(self, i + 1, s);
    }
  };
  rec(rec, 0, 0);
  return count;
}

BigInt BruteDescentCount(int n, const std::vector<int>& descents) {
  RequireAtMost(n, 10, "permutation size");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<int> want = descents;
  std::sort(want.begin(), want.end());
  BigInt count = 0;
  do {
    std::vector<int> d;
    for (int i = 0; i + 1 < n; ++i) {
      if (w[i] > w[i + 1]) d.push_back(i + 1);
    }
    if (d == want) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

BigInt BruteEulerian(int k, int n) {
  RequireAtMost(n, 10, "permutation size");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  BigInt count = 0;
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i) des += w[i] > w[i + 1];
    if (des == k - 1) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

Rational BruteCatalanArea(int n) {
  RequireAtMost(n, 12, "Catalan size");
  Rational total = 0;
  std::vector<int> word(2 * n, 0);  // 0 = E, 1 = N
  auto rec = [&](auto&& self, int east, int north, Rational area) -> void {
    if (east == n && north == n) {
      total += area;
      return;
    }
    if (east < n) {
      self(self, east + 1, north, area + Rational(2 * (east - north) + 1, 2));
    }
    if (north < east) self(self, east, north + 1, area);
  };
  rec(rec, 0, 0, Rational(0));
  return total;
}

std::vector<Rational> CatalanAreaSeries(int order) {
  const int len = order + 2;
  // sqrt(1 - 4t) by the square-root recurrence g^2 = f.
  std::vector<Rational> f(len, Rational(0));
  f[0] = 1;
  if (len > 1) f[1] = -4;
  std::vector<Rational> g(len, Rational(0));
  g[0] = 1;
  for (int k = 1; k < len; ++k) {
    Rational acc = f[k];
    for (int i = 1; i < k; ++i) acc -= g[i] * g[k - i];
    g[k] = acc / (2 * g[0]);
  }
  std::vector<Rational> numer(len);
  for (int k = 0; k < len; ++k) numer[k] = -g[k];
  numer[0] += 1;
  if (len > 1) numer[1] -= 2;
  // Divide by 4t, then multiply by 1 / (1 - 4t).
  std::vector<Rational> series(order + 1, Rational(0));
  for (int k = 0; k <= order; ++k) {
    Rational acc = 0;
    Rational power = 1;
    for (int i = k; i >= 0; --i) {
      acc += numer[i + 1] / 4 * power;
      power *= 4;
    }
    series[k] = acc;
  }
  return series;
}

std::vector<Region> RegionsOfShape(int m, int r) {
  const int n = m + r;
  std::vector<PathWord> paths;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    std::vector<Step> steps(n);
    for (int i = 0; i < n; ++i) {
      steps[i] = ((mask >> i) & 1u) ? Step::kNorth : Step::kEast;
    }
    paths.push_back(PathWord::FromSteps(std::move(steps)));
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Region> out;
  for (const auto& lower : paths) {
    for (const auto& upper : paths) {
      bool below = true;
      for (int i = 1; i <= n && below; ++i) {
        below = lower.height(i) <= upper.height(i);
      }
      if (below) out.push_back(MakeRegion(lower, upper));
    }
  }
  return out;
}

std::vector<Region> RegionSweep(int max_size) {
  std::vector<Region> out;
  for (int n = 1; n <= max_size; ++n) {
    for (int m = 0; m <= n; ++m) {
      auto shape = RegionsOfShape(m, n - m);
      out.insert(out.end(), shape.begin(), shape.end());
    }
  }
  return out;
}

}  // namespace lpm::oracle
