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

#ifndef CIRCLEFIX_MINIMIZER_H_
#define CIRCLEFIX_MINIMIZER_H_

#include <cstdint>
#include <vector>

#include "circlefix/chern.h"

namespace circlefix {

enum class Method { kLSearch, kLatticeEnum };

// A point of Z_1 (n even) or Z_2 (n odd) together with its objective.
struct MinimizationOutcome {
  int64_t n = 0;
  int64_t minimum = 0;
  int64_t l = 0;
  ReducedProfile witness;
  Method method = Method::kLSearch;
};

inline constexpr int64_t kDefaultLCap = 24;
inline constexpr int64_t kMaxBoxVolume = 100'000'000;

// min F_1 over Z_1 for n = 2m: the smallest l >= 1 such that l * m / r is a
// sum of squares k^2 (1 <= k <= m) using c parts with r * c <= 6 l. Throws
// kCapExceeded if no l <= l_cap works.
MinimizationOutcome MinimizeEven(int64_t m, int64_t l_cap = kDefaultLCap);

// min F_2 over Z_2 for n = 2m + 1: the smallest l >= 1 such that
// l * (m - 1) / r is a sum of triangular numbers T_k (1 <= k <= m) using c
// parts with r * c <= 12 l. m = 1 is solved directly.
MinimizationOutcome MinimizeOdd(int64_t m, int64_t l_cap = kDefaultLCap);

// Dispatches on the parity of n.
MinimizationOutcome Minimize(int64_t n, int64_t l_cap = kDefaultLCap);

// Every point of Z_1 / Z_2 with objective <= value_cap, found by exhaustive
// search of a bounding box and a direct test of the constraint. Sorted by
// objective, then lexicographically by witness. Throws kBoxTooLarge when the
// box holds more than kMaxBoxVolume points. The `l` field is left at 0.
std::vector<MinimizationOutcome> EnumerateFeasible(int64_t n,
                                                   int64_t value_cap);

// Symmetric profile attaining the minimum, with c_1 c_{n-1} = 0.
FixedPointProfile WitnessFullProfile(int64_t n);

}  // namespace circlefix

#endif  // CIRCLEFIX_MINIMIZER_H_
