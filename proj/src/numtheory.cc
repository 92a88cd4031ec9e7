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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "circlefix/error.h"

namespace circlefix {
namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 MulMod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>(static_cast<u128>(a) * b % mod);
}

u64 PowMod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, mod);
    base = MulMod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

// These bases are deterministic for every n < 2^64.
constexpr u64 kWitnessBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool MillerRabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnessBases) {
    if (a % n == 0) continue;
    u64 x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant. Returns a nontrivial divisor of the odd composite n.
u64 PollardRho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (MulMod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 block = 128;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = MulMod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void CollectPrimes(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (MillerRabin(n)) {
    ++out[n];
    return;
  }
  u64 d = PollardRho(n);
  CollectPrimes(d, out);
  CollectPrimes(n / d, out);
}

constexpr int64_t kTrialDivisionLimit = 1000;

// Greedy descending search: the largest first generator whose remainder can
// still be finished with `count - 1` parts. `min_count` must be exact.
template <typename MinCountFn>
Decomposition GreedyWitness(PartKind kind, int64_t n, int count,
                            MinCountFn min_count) {
  Decomposition d{kind, n, {}};
  int64_t rest = n;
  for (int left = count; left > 0; --left) {
    int64_t k = kind == PartKind::kSquares
                    ? IntegerSqrt(rest)
                    : (IntegerSqrt(8 * rest + 1) - 1) / 2;
    for (; k >= 1; --k) {
      const int64_t remainder = rest - PartValue(kind, k);
      if (min_count(remainder) <= left - 1) break;
    }
    if (k < 1) {
      throw Error(ErrorCode::kUnrepresentable,
                  "no witness for " + std::to_string(n));
    }
    if (!d.parts.empty() && d.parts.back().generator == k) {
      ++d.parts.back().multiplicity;
    } else {
      d.parts.push_back({k, 1});
    }
    rest -= PartValue(kind, k);
  }
  return d;
}

Representation BruteforceMin(PartKind kind, int64_t n, int64_t max_generator) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative target");
  }
  std::vector<int> best(n + 1, -1);
  std::vector<int64_t> last(n + 1, 0);
  best[0] = 0;
  for (int64_t v = 1; v <= n; ++v) {
    // Scanning generators downward and keeping strict improvements picks
    // the largest generator among optimal choices.
    for (int64_t k = max_generator; k >= 1; --k) {
      const int64_t p = PartValue(kind, k);
      if (p > v || best[v - p] < 0) continue;
      if (best[v] < 0 || best[v - p] + 1 < best[v]) {
        best[v] = best[v - p] + 1;
        last[v] = k;
      }
    }
  }
  if (best[n] < 0) {
    throw Error(ErrorCode::kUnrepresentable,
                std::to_string(n) + " with generators <= " +
                    std::to_string(max_generator));
  }
  std::map<int64_t, int64_t, std::greater<>> mult;
  for (int64_t v = n; v > 0; v -= PartValue(kind, last[v])) ++mult[last[v]];
  Decomposition d{kind, n, {}};
  for (auto [k, c] : mult) d.parts.push_back({k, c});
  return {best[n], std::move(d)};
}

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnrepresentable: return "Unrepresentable";
    case ErrorCode::kNonIntegralResult: return "NonIntegralResult";
    case ErrorCode::kEmptyProfile: return "EmptyProfile";
    case ErrorCode::kUnsupportedHalfDimension: return "UnsupportedHalfDimension";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kBoxTooLarge: return "BoxTooLarge";
  }
  return "Unknown";
}

int64_t Factorization::Product() const {
  int64_t product = 1;
  for (const auto& f : factors) {
    for (int i = 0; i < f.exponent; ++i) product *= f.prime;
  }
  return product;
}

int64_t Decomposition::Count() const {
  int64_t c = 0;
  for (const auto& p : parts) c += p.multiplicity;
  return c;
}

int64_t Decomposition::Sum() const {
  int64_t s = 0;
  for (const auto& p : parts) s += p.multiplicity * PartValue(kind, p.generator);
  return s;
}

bool Decomposition::IsValid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].generator < 1 || parts[i].multiplicity < 1) return false;
    if (i > 0 && parts[i].generator >= parts[i - 1].generator) return false;
  }
  return Sum() == target;
}

int64_t PartValue(PartKind kind, int64_t generator) {
  return kind == PartKind::kSquares ? generator * generator
                                    : generator * (generator + 1) / 2;
}

bool IsPrime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  return MillerRabin(static_cast<u64>(n));
}

Factorization Factorize(int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot factorize " + std::to_string(n));
  }
  Factorization result;
  for (int64_t p = 2; p < kTrialDivisionLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) result.factors.push_back({p, e});
  }
  if (n > 1) {
    std::map<u64, int> rest;
    CollectPrimes(static_cast<u64>(n), rest);
    for (auto [p, e] : rest) {
      result.factors.push_back({static_cast<int64_t>(p), e});
    }
  }
  return result;
}

int64_t IntegerSqrt(int64_t n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative sqrt argument");
  }
  auto r = static_cast<int64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool IsSquare(int64_t n) {
  if (n < 0) return false;
  const int64_t r = IntegerSqrt(n);
  return r * r == n;
}

bool IsTriangular(int64_t n) {
  if (n < 0) return false;
  return IsSquare(8 * n + 1);
}

bool SumOfTwoSquaresCriterion(int64_t n) {
  if (n == 0) return true;
  for (const auto& f : Factorize(n).factors) {
    if (f.prime % 4 == 3 && f.exponent % 2 == 1) return false;
  }
  return true;
}

bool IsLegendreForm(int64_t n) {
  if (n <= 0) return false;
  while (n % 4 == 0) n /= 4;
  return n % 8 == 7;
}

bool SumOfTwoTriangularsCriterion(int64_t n) {
  return SumOfTwoSquaresCriterion(4 * n + 1);
}

int MinSquaresCount(int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative target");
  if (n == 0) return 0;
  if (IsSquare(n)) return 1;
  if (SumOfTwoSquaresCriterion(n)) return 2;
  if (IsLegendreForm(n)) return 4;
  return 3;
}

int MinTriangularsCount(int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative target");
  if (n == 0) return 0;
  if (IsTriangular(n)) return 1;
  if (SumOfTwoTriangularsCriterion(n)) return 2;
  return 3;
}

Representation MinSquares(int64_t n) {
  const int count = MinSquaresCount(n);
  return {count, GreedyWitness(PartKind::kSquares, n, count, MinSquaresCount)};
}

Representation MinTriangulars(int64_t n) {
  const int count = MinTriangularsCount(n);
  return {count,
          GreedyWitness(PartKind::kTriangulars, n, count, MinTriangularsCount)};
}

Representation MinSquaresBruteforce(int64_t n, int64_t max_generator) {
  return BruteforceMin(PartKind::kSquares, n, max_generator);
}

Representation MinTriangularsBruteforce(int64_t n, int64_t max_generator) {
  return BruteforceMin(PartKind::kTriangulars, n, max_generator);
}

std::vector<int> MinPartCountTable(PartKind kind, int64_t limit,
                                   int64_t max_generator) {
  if (limit < 0) throw Error(ErrorCode::kInvalidArgument, "negative limit");
  std::vector<int> best(limit + 1, -1);
  best[0] = 0;
  for (int64_t k = 1; k <= max_generator; ++k) {
    const int64_t p = PartValue(kind, k);
    if (p > limit) break;
    for (int64_t v = p; v <= limit; ++v) {
      if (best[v - p] >= 0 && (best[v] < 0 || best[v - p] + 1 < best[v])) {
        best[v] = best[v - p] + 1;
      }
    }
  }
  return best;
}

}  // namespace circlefix
