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

#include "circlefix/numtheory.h"

#include <gtest/gtest.h>

#include <random>

#include "circlefix/error.h"

namespace circlefix {
namespace {

Factorization Factors(std::initializer_list<PrimePower> f) { return {f}; }

TEST(FactorizeTest, WorkedExamples) {
  EXPECT_EQ(Factorize(425).factors, Factors({{5, 2}, {17, 1}}).factors);
  EXPECT_EQ(Factorize(105).factors, Factors({{3, 1}, {5, 1}, {7, 1}}).factors);
  EXPECT_TRUE(Factorize(1).factors.empty());
}

TEST(FactorizeTest, RejectsNonPositive) {
  EXPECT_THROW(Factorize(0), Error);
  EXPECT_THROW(Factorize(-12), Error);
}

TEST(FactorizeTest, LargeSemiprimesAndPrimePowers) {
  const int64_t p = 1000000007, q = 1000000009;
  EXPECT_EQ(Factorize(p * q).factors, Factors({{p, 1}, {q, 1}}).factors);
  EXPECT_EQ(Factorize(p * p).factors, Factors({{p, 2}}).factors);
  const int64_t big_prime = 9223372036854775783;  // largest prime < 2^63
  EXPECT_EQ(Factorize(big_prime).factors, Factors({{big_prime, 1}}).factors);
  EXPECT_EQ(Factorize(int64_t{1} << 62).factors, Factors({{2, 62}}).factors);
}

TEST(FactorizeTest, ProductRoundTripAndPrimality) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int64_t> dist(1, int64_t{1} << 62);
  for (int i = 0; i < 300; ++i) {
    const int64_t n = i < 100 ? i + 1 : dist(rng);
    const Factorization f = Factorize(n);
    EXPECT_EQ(f.Product(), n);
    for (size_t j = 0; j < f.factors.size(); ++j) {
      EXPECT_TRUE(IsPrime(f.factors[j].prime)) << f.factors[j].prime;
      EXPECT_GT(f.factors[j].exponent, 0);
      if (j > 0) EXPECT_LT(f.factors[j - 1].prime, f.factors[j].prime);
    }
  }
}

TEST(IsPrimeTest, MatchesSieve) {
  constexpr int kLimit = 20000;
  std::vector<bool> composite(kLimit + 1, false);
  for (int i = 2; i * i <= kLimit; ++i) {
    if (composite[i]) continue;
    for (int j = i * i; j <= kLimit; j += i) composite[j] = true;
  }
  for (int n = 0; n <= kLimit; ++n) {
    EXPECT_EQ(IsPrime(n), n >= 2 && !composite[n]) << n;
  }
}

TEST(SquareTest, Examples) {
  EXPECT_TRUE(IsSquare(0));
  EXPECT_TRUE(IsSquare(9));
  EXPECT_FALSE(IsSquare(15));
  EXPECT_TRUE(IsSquare(int64_t{3037000499} * 3037000499));
  EXPECT_FALSE(IsSquare(int64_t{3037000499} * 3037000499 - 1));
}

TEST(TriangularTest, Examples) {
  EXPECT_TRUE(IsTriangular(0));
  EXPECT_TRUE(IsTriangular(105));
  EXPECT_FALSE(IsTriangular(59));
}

TEST(LegendreFormTest, MatchesDefinition) {
  // Direct enumeration of 4^k (8t + 7).
  std::vector<bool> expected(5001, false);
  for (int64_t pow4 = 1; pow4 * 7 <= 5000; pow4 *= 4) {
    for (int64_t t = 0; pow4 * (8 * t + 7) <= 5000; ++t) {
      expected[pow4 * (8 * t + 7)] = true;
    }
  }
  for (int n = 0; n <= 5000; ++n) EXPECT_EQ(IsLegendreForm(n), expected[n]) << n;
}

TEST(MinSquaresTest, WorkedExamples) {
  const Representation r245 = MinSquares(245);
  EXPECT_EQ(r245.count, 2);
  EXPECT_EQ(r245.witness.parts, (std::vector<Part>{{14, 1}, {7, 1}}));
  EXPECT_EQ(MinSquares(105).count, 3);
  EXPECT_EQ(MinSquares(60).count, 4);
  EXPECT_EQ(MinSquares(0).count, 0);
  EXPECT_TRUE(MinSquares(0).witness.parts.empty());
}

TEST(MinTriangularsTest, WorkedExamples) {
  const Representation r106 = MinTriangulars(106);
  EXPECT_EQ(r106.count, 2);
  EXPECT_EQ(r106.witness.parts, (std::vector<Part>{{14, 1}, {1, 1}}));
  const Representation r59 = MinTriangulars(59);
  EXPECT_EQ(r59.count, 3);
  EXPECT_TRUE(r59.witness.IsValid());
  // The greedy witness takes the largest first part: 55 + 3 + 1.
  EXPECT_EQ(r59.witness.parts, (std::vector<Part>{{10, 1}, {2, 1}, {1, 1}}));
  // 28 + 21 + 10 is another minimal representation.
  const Decomposition alt{PartKind::kTriangulars, 59, {{7, 1}, {6, 1}, {4, 1}}};
  EXPECT_TRUE(alt.IsValid());
  EXPECT_EQ(MinTriangulars(0).count, 0);
}

TEST(BruteforceTest, Examples) {
  EXPECT_EQ(MinSquaresBruteforce(60, 7).count, 4);
  const Representation ones = MinSquaresBruteforce(4, 1);
  EXPECT_EQ(ones.count, 4);
  EXPECT_EQ(ones.witness.parts, (std::vector<Part>{{1, 4}}));
  EXPECT_EQ(MinSquaresBruteforce(0, 5).count, 0);
  EXPECT_EQ(MinTriangularsBruteforce(106, 14).count, 2);
  EXPECT_EQ(MinTriangularsBruteforce(3, 1).count, 3);
  EXPECT_EQ(MinTriangularsBruteforce(0, 9).count, 0);
}

TEST(BruteforceTest, Unrepresentable) {
  try {
    MinSquaresBruteforce(5, 0);
    FAIL() << "expected Unrepresentable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnrepresentable);
  }
}

TEST(BruteforceTest, PartBoundBinds) {
  // 25 = 5^2 but with parts <= 4^2 it needs 16 + 9.
  EXPECT_EQ(MinSquaresBruteforce(25, 5).count, 1);
  EXPECT_EQ(MinSquaresBruteforce(25, 4).count, 2);
}

// Criteria vs dynamic program on a moderate range; the full 10^5 sweep runs
// in the acceptance suite.
TEST(MinSquaresTest, AgreesWithTableOracle) {
  constexpr int64_t kLimit = 5000;
  const auto squares = MinPartCountTable(PartKind::kSquares, kLimit, 100);
  const auto triangulars = MinPartCountTable(PartKind::kTriangulars, kLimit, 100);
  for (int64_t n = 0; n <= kLimit; ++n) {
    const Representation s = MinSquares(n);
    ASSERT_EQ(s.count, squares[n]) << n;
    ASSERT_TRUE(s.witness.IsValid()) << n;
    ASSERT_EQ(s.witness.Count(), s.count) << n;
    const Representation t = MinTriangulars(n);
    ASSERT_EQ(t.count, triangulars[n]) << n;
    ASSERT_TRUE(t.witness.IsValid()) << n;
    ASSERT_EQ(t.witness.Count(), t.count) << n;
  }
}

TEST(MinSquaresTest, BruteforceWitnessValid) {
  for (int64_t n = 0; n <= 400; ++n) {
    const Representation s = MinSquaresBruteforce(n, IntegerSqrt(n) + 1);
    EXPECT_TRUE(s.witness.IsValid());
    EXPECT_EQ(s.witness.Count(), s.count);
    EXPECT_EQ(s.count, MinSquaresCount(n));
  }
}

TEST(MinSquaresTest, LargeInputs) {
  // 4^10 * 7 needs four squares. The semiprime near 10^18 sends every
  // witness step through Pollard rho.
  const int64_t legendre = (int64_t{1} << 20) * 7;
  const Representation r = MinSquares(legendre);
  EXPECT_EQ(r.count, 4);
  EXPECT_TRUE(r.witness.IsValid());
  const int64_t big = 1'000'000'007LL * 1'000'000'009LL;
  const Representation b = MinSquares(big);
  EXPECT_TRUE(b.witness.IsValid());
  EXPECT_EQ(b.witness.Count(), b.count);
}

}  // namespace
}  // namespace circlefix
