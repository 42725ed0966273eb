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

#ifndef LPM_NUMERIC_HPP_
#define LPM_NUMERIC_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace lpm {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt Binomial(long n, long k);

// ((n, k)): number of size-k multisets drawn from n kinds, binom(n+k-1, k).
// Zero for n <= 0 unless k == 0.
BigInt Multichoose(long n, long k);

BigInt Factorial(long n);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);
std::string ToString(const BigInt& value);

// Parses "p/q" or "p".
Rational ParseRational(const std::string& text);

}  // namespace lpm

#endif  // LPM_NUMERIC_HPP_
