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

#include "circlefix/minimizer.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "circlefix/error.h"
#include "circlefix/numtheory.h"

namespace circlefix {
namespace {

// Smallest representation of `target` with generators 1..max_generator. The
// criteria apply directly whenever no admissible part can exceed the bound.
Representation BoundedMinimum(PartKind kind, int64_t target,
                              int64_t max_generator) {
  if (target <= PartValue(kind, max_generator)) {
    return kind == PartKind::kSquares ? MinSquares(target)
                                      : MinTriangulars(target);
  }
  return kind == PartKind::kSquares
             ? MinSquaresBruteforce(target, max_generator)
             : MinTriangularsBruteforce(target, max_generator);
}

ReducedProfile WitnessFrom(Parity parity, int64_t m, const Decomposition& d,
                           int64_t middle) {
  ReducedProfile rp{parity, static_cast<int>(m),
                    std::vector<int64_t>(m + 1, 0)};
  for (const Part& p : d.parts) rp.counts[m - p.generator] += p.multiplicity;
  rp.counts[m] = middle;
  return rp;
}

[[noreturn]] void CapExceeded(int64_t m, int64_t l_cap) {
  throw Error(ErrorCode::kCapExceeded,
              "no l <= " + std::to_string(l_cap) + " for m = " +
                  std::to_string(m));
}

struct Box {
  std::vector<int64_t> upper;  // bound on N_{m-k}, k = 1..m (index k - 1)
  int64_t middle_upper = 0;    // bound on N_m
};

Box FeasibleBox(int64_t n, int64_t value_cap) {
  const int64_t m = n / 2;
  Box box;
  if (n % 2 == 0) {
    // 12 sum k^2 N_{m-k} = m F_1 on Z_1, and 2 N_{m-k} <= F_1.
    for (int64_t k = 1; k <= m; ++k) {
      box.upper.push_back(
          std::min(m * value_cap / (12 * k * k), value_cap / 2));
    }
    box.middle_upper = value_cap;
  } else {
    // 12 sum T_k N_{m-k} = (m - 1) F_2 / 2 on Z_2, and 2 N_i <= F_2.
    for (int64_t k = 1; k <= m; ++k) {
      box.upper.push_back(std::min(
          (m - 1) * value_cap / (24 * PartValue(PartKind::kTriangulars, k)),
          value_cap / 2));
    }
    box.middle_upper = value_cap / 2;
  }
  return box;
}

}  // namespace

MinimizationOutcome MinimizeEven(int64_t m, int64_t l_cap) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  const int64_t r = std::gcd(m, int64_t{12});
  for (int64_t l = 1; l <= l_cap; ++l) {
    const Representation rep =
        BoundedMinimum(PartKind::kSquares, l * m / r, m);
    if (r * rep.count > 6 * l) continue;
    const int64_t middle = (12 * l - 2 * r * rep.count) / r;
    return {2 * m, 12 * l / r, l,
            WitnessFrom(Parity::kEven, m, rep.witness, middle),
            Method::kLSearch};
  }
  CapExceeded(m, l_cap);
}

MinimizationOutcome MinimizeOdd(int64_t m, int64_t l_cap) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  if (m == 1) {
    // G_2 = 12 N_0 forces N_0 = 0; F_2 = 2 N_1.
    return {3, 2, 1, ReducedProfile{Parity::kOdd, 1, {0, 1}},
            Method::kLSearch};
  }
  const int64_t r = std::gcd(m - 1, int64_t{12});
  for (int64_t l = 1; l <= l_cap; ++l) {
    const Representation rep =
        BoundedMinimum(PartKind::kTriangulars, l * (m - 1) / r, m);
    if (r * rep.count > 12 * l) continue;
    const int64_t middle = (12 * l - r * rep.count) / r;
    return {2 * m + 1, 24 * l / r, l,
            WitnessFrom(Parity::kOdd, m, rep.witness, middle),
            Method::kLSearch};
  }
  CapExceeded(m, l_cap);
}

MinimizationOutcome Minimize(int64_t n, int64_t l_cap) {
  if (n < 2) {
    throw Error(ErrorCode::kUnsupportedHalfDimension,
                "n = " + std::to_string(n) + " (need n >= 2)");
  }
  return n % 2 == 0 ? MinimizeEven(n / 2, l_cap) : MinimizeOdd(n / 2, l_cap);
}

std::vector<MinimizationOutcome> EnumerateFeasible(int64_t n,
                                                   int64_t value_cap) {
  if (n < 2) {
    throw Error(ErrorCode::kUnsupportedHalfDimension,
                "n = " + std::to_string(n) + " (need n >= 2)");
  }
  if (value_cap < 1) {
    throw Error(ErrorCode::kInvalidArgument, "value_cap must be positive");
  }
  const int64_t m = n / 2;
  const Parity parity = n % 2 == 0 ? Parity::kEven : Parity::kOdd;
  const Box box = FeasibleBox(n, value_cap);

  double volume = static_cast<double>(box.middle_upper + 1);
  for (int64_t u : box.upper) volume *= static_cast<double>(u + 1);
  if (volume > static_cast<double>(kMaxBoxVolume)) {
    throw Error(ErrorCode::kBoxTooLarge,
                "n = " + std::to_string(n) + ", cap = " +
                    std::to_string(value_cap));
  }

  std::vector<MinimizationOutcome> found;
  ReducedProfile rp{parity, static_cast<int>(m), std::vector<int64_t>(m + 1, 0)};
  // Odometer over the box; every point is tested against G and F directly.
  std::vector<int64_t>& c = rp.counts;
  while (true) {
    for (int64_t mid = 0; mid <= box.middle_upper; ++mid) {
      c[m] = mid;
      if (Constraint(rp) != 0) continue;
      const int64_t objective = Objective(rp);
      if (objective <= 0 || objective > value_cap) continue;
      found.push_back({n, objective, 0, rp, Method::kLatticeEnum});
    }
    c[m] = 0;
    int64_t k = 1;
    for (; k <= m; ++k) {
      if (c[m - k] < box.upper[k - 1]) {
        ++c[m - k];
        break;
      }
      c[m - k] = 0;
    }
    if (k > m) break;
  }
  std::sort(found.begin(), found.end(),
            [](const MinimizationOutcome& a, const MinimizationOutcome& b) {
              if (a.minimum != b.minimum) return a.minimum < b.minimum;
              return a.witness.counts < b.witness.counts;
            });
  return found;
}

FixedPointProfile WitnessFullProfile(int64_t n) {
  return Expand(Minimize(n).witness);
}

}  // namespace circlefix
