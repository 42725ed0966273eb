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

#include "lpm/volume_ehrhart.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpm/error.hpp"
#include "lpm/polytope.hpp"

namespace lpm {

BigInt ExactDescentCount(int n, std::span<const int> descents) {
  std::vector<int> d(descents.begin(), descents.end());
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(d.begin(), d.end()) != d.end() ||
      (!d.empty() && (d.front() < 1 || d.back() > n - 1))) {
    throw std::invalid_argument("descent positions must be distinct in 1..n-1");
  }
  const int k = static_cast<int>(d.size());
  BigInt total = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    // Permutations whose descent set lies inside the chosen subset:
    // multinomial over the gaps between consecutive cut points.
    BigInt term = Factorial(n);
    int prev = 0;
    int chosen = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        term /= Factorial(d[i] - prev);
        prev = d[i];
        ++chosen;
      }
    }
    term /= Factorial(n - prev);
    if ((k - chosen) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt StripVolume(const BorderStrip& strip) {
  return ExactDescentCount(strip.length(), strip.descents);
}

BigInt Volume(const Region& region) {
  if (!IsConnected(region)) {
    throw Error(ErrorCode::kDisconnectedRegion,
                "volume of " + region.str() +
                    " needs a connected region; compute it per block");
  }
  BigInt total = 0;
  for (const auto& strip : BorderStrips(region)) total += StripVolume(strip);
  return total;
}

BigInt Eulerian(int k, int n) {
  if (n < 0) return 0;
  // row[j]: permutations of the current size with j descents.
  std::vector<BigInt> row{1};
  for (int size = 1; size <= n; ++size) {
    std::vector<BigInt> next(size, 0);
    for (int j = 0; j < size; ++j) {
      if (j < static_cast<int>(row.size())) next[j] += (j + 1) * row[j];
      if (j >= 1 && j - 1 < static_cast<int>(row.size())) {
        next[j] += (size - j) * row[j - 1];
      }
    }
    row = std::move(next);
  }
  const int descents = k - 1;
  if (descents < 0 || descents >= static_cast<int>(row.size())) return 0;
  return row[descents];
}

namespace {

BigInt Catalan(int n) { return Binomial(2 * n, n) / (n + 1); }

}  // namespace

Rational CatalanAreaRecurrence(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Rational> area{Rational(0)};
  for (int size = 0; size < n; ++size) {
    Rational next = 0;
    for (int k = 0; k <= size; ++k) {
      const BigInt cc = Catalan(k) * Catalan(size - k);
      next += 2 * area[k] * Rational(Catalan(size - k));
      next += Rational(cc, 2);
      next += Rational(k * cc);
    }
    area.push_back(next);
  }
  return area[n];
}

Rational CatalanAreaClosedForm(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  BigInt four = 1;
  for (int i = 0; i < n; ++i) four *= 4;
  return Rational(four, 2) - Rational(Binomial(2 * n + 2, n + 1), 4);
}

Rational CatalanArea(int n) {
  Rational a = CatalanAreaRecurrence(n);
  if (a != CatalanAreaClosedForm(n)) {
    throw std::logic_error("area recurrence and closed form disagree at n=" +
                           std::to_string(n));
  }
  return a;
}

BigInt CountLatticePoints(const Region& region, int t) {
  if (t < 0) throw std::invalid_argument("dilation must be nonnegative");
  const int n = region.size();
  const int top = t * region.r();
  // ways[c]: points of the partial prefix with current prefix sum c.
  std::vector<BigInt> ways(top + 1, 0);
  ways[0] = 1;
  std::vector<BigInt> prefix(top + 2);
  for (int i = 1; i <= n; ++i) {
    prefix[0] = 0;
    for (int c = 0; c <= top; ++c) prefix[c + 1] = prefix[c] + ways[c];
    const int lo = t * region.lower_height(i);
    const int hi = t * region.upper_height(i);
    for (int c = 0; c <= top; ++c) {
      if (c < lo || c > hi) {
        ways[c] = 0;
        continue;
      }
      ways[c] = prefix[c + 1] - prefix[std::max(0, c - t)];
    }
  }
  return ways[top];
}

EhrhartPolynomial::EhrhartPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational EhrhartPolynomial::Evaluate(long t) const {
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value = value * t + *it;
  }
  return value;
}

BigInt EhrhartPolynomial::NormalizedVolume() const {
  const Rational v = coeffs_.back() * Rational(Factorial(degree()));
  if (boost::multiprecision::denominator(v) != 1) {
    throw std::logic_error("normalized volume is not an integer");
  }
  return boost::multiprecision::numerator(v);
}

EhrhartPolynomial ComputeEhrhartPolynomial(const Region& region) {
  const int d = Dimension(region);
  std::vector<BigInt> values;
  for (int t = 0; t <= d; ++t) values.push_back(CountLatticePoints(region, t));

  // Newton forward differences at 0, then expand binom(t, k) in powers of t.
  std::vector<BigInt> diffs = values;
  std::vector<BigInt> leading;
  for (int k = 0; k <= d; ++k) {
    leading.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
      diffs[i] = diffs[i + 1] - diffs[i];
    }
    diffs.pop_back();
  }
  std::vector<Rational> coeffs(d + 1, Rational(0));
  std::vector<Rational> falling{Rational(1)};  // t (t-1) ... (t-k+1)
  for (int k = 0; k <= d; ++k) {
    const Rational scale = Rational(leading[k]) / Rational(Factorial(k));
    for (std::size_t i = 0; i < falling.size(); ++i) {
      coeffs[i] += scale * falling[i];
    }
    std::vector<Rational> next(falling.size() + 1, Rational(0));
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * k;
    }
    falling = std::move(next);
  }
  EhrhartPolynomial poly(std::move(coeffs));
  for (int t = d + 1; t <= d + 2; ++t) {
    if (poly.Evaluate(t) != Rational(CountLatticePoints(region, t))) {
      throw std::logic_error("Ehrhart interpolation fails at t=" +
                             std::to_string(t) + " for " + region.str());
    }
  }
  return poly;
}

GammaBounds ComputeGammaBounds(const Region& region) {
  GammaBounds bounds;
  auto first_reach = [&](const PathWord& path, int height) {
    for (int i = 0; i <= path.length(); ++i) {
      if (path.height(i) >= height) return i;
    }
    return path.length() + 1;
  };
  for (int k = 1; k < region.r(); ++k) {
    bounds.a.push_back(first_reach(region.lower(), k + 1) - 1);
    bounds.b.push_back(first_reach(region.upper(), k + 1) - 1);
  }
  return bounds;
}

std::vector<std::vector<int>> GammaSet(const Region& region) {
  const GammaBounds bounds = ComputeGammaBounds(region);
  const int n = region.size();
  const int r = region.r();
  std::vector<std::vector<int>> out;
  if (r == 0) return out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int sum) -> void {
    const int i = static_cast<int>(parts.size());
    if (i == r - 1) {
      if (n - sum >= 1) {
        parts.push_back(n - sum);
        out.push_back(parts);
        parts.pop_back();
      }
      return;
    }
    for (int part = 1; sum + part <= n; ++part) {
      const int partial = sum + part;
      if (partial < bounds.b[i]) continue;
      if (partial > bounds.a[i]) break;
      parts.push_back(part);
      self(self, partial);
      parts.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> FoldedBlockVector(const BasisVector& basis) {
  int r = 0;
  for (auto c : basis.coords()) r += c;
  std::vector<int> parts(r, 0);
  if (r == 0) return parts;
  int height = 0;
  for (auto c : basis.coords()) {
    height += c;
    ++parts[std::max(height, 1) - 1];
  }
  return parts;
}

void ForEachSArray(int r, int t,
                   const std::function<void(std::span<const int>)>& visit) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  const int len = 2 * (r - 1);
  std::vector<int> s(len, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == len) {
      visit(s);
      return;
    }
    const int cap = i == 0 ? t : t - s[i - 1];
    for (int v = 0; v <= cap; ++v) {
      s[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

std::vector<std::vector<int>> SSet(int r, int t) {
  std::vector<std::vector<int>> out;
  ForEachSArray(r, t, [&](std::span<const int> s) {
    out.emplace_back(s.begin(), s.end());
  });
  return out;
}

BigInt EhrhartFormulaValue(const Region& region, int t) {
  const int r = region.r();
  const auto gamma = GammaSet(region);
  BigInt total = 0;
  if (r == 0) return total;
  if (r == 1) {
    for (const auto& alpha : gamma) total += Multichoose(t + 1, alpha[0]);
    return total;
  }
  ForEachSArray(r, t, [&](std::span<const int> s) {
    for (const auto& alpha : gamma) {
      BigInt term = Multichoose(t + 1 - s[0], alpha[0]);
      for (int i = 2; i < r && term != 0; ++i) {
        term *= Multichoose(t - s[2 * i - 3] - s[2 * i - 2], alpha[i - 1]);
      }
      term *= Multichoose(t - s[2 * r - 3], alpha[r - 1]);
      total += term;
    }
  });
  return total;
}

std::vector<ReconcileRow> ReconcileEhrhartFormula(const Region& region,
                                                  int t_max) {
  std::vector<ReconcileRow> rows;
  for (int t = 0; t <= t_max; ++t) {
    rows.push_back({t, EhrhartFormulaValue(region, t),
                    CountLatticePoints(region, t)});
  }
  return rows;
}

}  // namespace lpm
