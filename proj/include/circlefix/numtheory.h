// Copyright 2026 The circlefix Authors
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

#ifndef CIRCLEFIX_NUMTHEORY_H_
#define CIRCLEFIX_NUMTHEORY_H_

#include <cstdint>
#include <vector>

namespace circlefix {

struct PrimePower {
  int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes. Empty for 1.
struct Factorization {
  std::vector<PrimePower> factors;

  // Recomputes the product of all prime powers.
  int64_t Product() const;
};

enum class PartKind { kSquares, kTriangulars };

struct Part {
  int64_t generator = 0;  // k >= 1
  int64_t multiplicity = 0;

  friend bool operator==(const Part&, const Part&) = default;
};

// A representation of `target` as a sum of squares k^2 or triangular numbers
// k(k+1)/2. Parts are listed by strictly decreasing generator.
struct Decomposition {
  PartKind kind = PartKind::kSquares;
  int64_t target = 0;
  std::vector<Part> parts;

  int64_t Count() const;
  int64_t Sum() const;
  // Sum() == target, all generators positive and distinct, all
  // multiplicities positive.
  bool IsValid() const;
};

struct Representation {
  int count = 0;
  Decomposition witness;
};

// Value of a single part: k^2 or k(k+1)/2.
int64_t PartValue(PartKind kind, int64_t generator);

bool IsPrime(int64_t n);

// Deterministic Miller-Rabin plus Pollard rho. Throws kInvalidArgument for
// n < 1.
Factorization Factorize(int64_t n);

int64_t IntegerSqrt(int64_t n);
bool IsSquare(int64_t n);
bool IsTriangular(int64_t n);

// n > 0 is a sum of at most two squares iff every prime p = 3 (mod 4) has
// even exponent. Also true for n = 0.
bool SumOfTwoSquaresCriterion(int64_t n);

// n = 4^k (8t + 7) for some k, t >= 0.
bool IsLegendreForm(int64_t n);

// n is a sum of at most two triangular numbers (criterion on 4n + 1).
bool SumOfTwoTriangularsCriterion(int64_t n);

// Minimal number of positive squares summing to n, from the classical
// criteria. Never more than 4.
int MinSquaresCount(int64_t n);
// Minimal number of positive triangular numbers summing to n. At most 3.
int MinTriangularsCount(int64_t n);

// Criteria-based count plus a witness of that size.
Representation MinSquares(int64_t n);
Representation MinTriangulars(int64_t n);

// Exact minimum by dynamic programming over parts with generator
// 1 <= k <= max_generator. Independent of the criteria above. Throws
// kUnrepresentable when no such representation exists.
Representation MinSquaresBruteforce(int64_t n, int64_t max_generator);
Representation MinTriangularsBruteforce(int64_t n, int64_t max_generator);

// Minimal part counts for every target 0..limit at once (same dynamic
// program as the bruteforce routines). Unreachable entries hold -1.
std::vector<int> MinPartCountTable(PartKind kind, int64_t limit,
                                   int64_t max_generator);

}  // namespace circlefix

#endif  // CIRCLEFIX_NUMTHEORY_H_
