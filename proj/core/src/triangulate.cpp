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

#include "lpm/triangulate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "lpm/error.hpp"

namespace lpm {

Permutation Inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i + 1);
  return inv;
}

std::vector<int> DescentPositions(const Permutation& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

namespace {

Rational FractionalPart(const Rational& v) {
  BigInt q = boost::multiprecision::numerator(v) /
             boost::multiprecision::denominator(v);
  Rational f = v - Rational(q);
  if (f < 0) f += 1;
  return f;
}

std::string PermutationString(const Permutation& w) {
  std::string s;
  for (int v : w) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "(" + s + ")";
}

// Applies the chamber-w inverse without checking membership; used on the
// closure vertices, which sit on chamber walls.
RationalPoint AffineInverse(const Permutation& inv, const RationalPoint& y) {
  RationalPoint x(y.size());
  if (y.empty()) return x;
  x[0] = y[0];
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    x[i + 1] = y[i + 1] - y[i];
    if (inv[i + 1] < inv[i]) x[i + 1] += 1;
  }
  return x;
}

SimplexCell BuildCell(const Permutation& w, int total) {
  const int size = static_cast<int>(w.size());
  const Permutation inv = Inverse(w);
  SimplexCell cell;
  cell.label = w;
  for (int j = 0; j <= size; ++j) {
    RationalPoint corner(size, Rational(0));
    for (int k = size - j; k < size; ++k) corner[w[k] - 1] = 1;
    RationalPoint v = AffineInverse(inv, corner);
    RationalPoint lifted = v;
    Rational sum = 0;
    for (const auto& c : v) sum += c;
    lifted.push_back(Rational(total) - sum);
    cell.vertices.push_back(std::move(v));
    cell.ambient.push_back(std::move(lifted));
  }
  return cell;
}

template <typename Keep>
std::vector<SimplexCell> Cells(int size, int total, Keep keep) {
  std::vector<SimplexCell> cells;
  Permutation w(size);
  std::iota(w.begin(), w.end(), 1);
  do {
    if (keep(DescentPositions(Inverse(w)))) cells.push_back(BuildCell(w, total));
  } while (std::next_permutation(w.begin(), w.end()));
  return cells;
}

// Solves A x = b for square nonsingular A; nullopt if singular.
std::optional<std::vector<Rational>> Solve(std::vector<std::vector<Rational>> a,
                                           std::vector<Rational> b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (int c = col; c < n; ++c) a[row][c] -= f * a[col][c];
      b[row] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

RationalPoint Psi(const RationalPoint& x) {
  RationalPoint y(x.size());
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i];
    y[i] = FractionalPart(sum);
  }
  return y;
}

RationalPoint PsiInverseOn(const Permutation& w, const RationalPoint& y) {
  if (w.size() != y.size()) {
    throw std::invalid_argument("permutation and point sizes differ");
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (y[w[i] - 1] > y[w[i + 1] - 1]) {
      throw Error(ErrorCode::kWrongChamber,
                  "point is not in the chamber of " + PermutationString(w),
                  static_cast<int>(i + 1));
    }
  }
  return AffineInverse(Inverse(w), y);
}

std::vector<SimplexCell> HypersimplexTriangulation(int k, int n) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw Error(ErrorCode::kBadK, "need 1 <= k <= n-1, got k=" +
                                      std::to_string(k) + ", n=" +
                                      std::to_string(n));
  }
  return Cells(n - 1, k, [&](const std::vector<int>& d) {
    return static_cast<int>(d.size()) == k - 1;
  });
}

std::vector<SimplexCell> StripTriangulation(const BorderStrip& strip) {
  if (strip.length() < 1) throw std::invalid_argument("strip has no boxes");
  return Cells(strip.length(), static_cast<int>(strip.descents.size()) + 1,
               [&](const std::vector<int>& d) { return d == strip.descents; });
}

Rational CellDeterminant(const SimplexCell& cell) {
  const int dim = static_cast<int>(cell.vertices.size()) - 1;
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      a[i][j] = cell.vertices[i + 1][j] - cell.vertices[0][j];
    }
  }
  Rational det = 1;
  for (int col = 0; col < dim; ++col) {
    int pivot = col;
    while (pivot < dim && a[pivot][col] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < dim; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (int c = col; c < dim; ++c) a[row][c] -= f * a[col][c];
    }
  }
  return det;
}

long TriangulationVolumeCheck(std::span<const SimplexCell> cells) {
  long total = 0;
  for (const auto& cell : cells) {
    const Rational det = CellDeterminant(cell);
    if (det != 1 && det != -1) {
      throw Error(ErrorCode::kNonUnimodularCell,
                  "cell " + PermutationString(cell.label) + " has determinant " +
                      ToString(det));
    }
    ++total;
  }
  return total;
}

bool CellContains(const SimplexCell& cell, const RationalPoint& point,
                  bool strict) {
  const int dim = static_cast<int>(cell.vertices.size()) - 1;
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
  std::vector<Rational> b(dim);
  for (int row = 0; row < dim; ++row) {
    for (int j = 0; j < dim; ++j) {
      a[row][j] = cell.vertices[j + 1][row] - cell.vertices[0][row];
    }
    b[row] = point[row] - cell.vertices[0][row];
  }
  auto lambda = Solve(std::move(a), std::move(b));
  if (!lambda) return false;
  Rational rest = 1;
  for (const auto& l : *lambda) {
    if (strict ? l <= 0 : l < 0) return false;
    rest -= l;
  }
  return strict ? rest > 0 : rest >= 0;
}

}  // namespace lpm
