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

#include "circlefix/bounds.h"

#include <numeric>

#include "circlefix/error.h"
#include "circlefix/numtheory.h"

namespace circlefix {
namespace {

void RequireHalfDimension(int64_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kUnsupportedHalfDimension,
                "n = " + std::to_string(n) + " (need n >= 2)");
  }
}

BoundResult Make(int64_t n, int64_t m, int64_t r, int64_t value,
                 std::string branch) {
  const int64_t scale = n % 2 == 0 ? 12 : 24;
  return {n, m, r, value, std::move(branch), value * r / scale};
}

BoundResult EvenBound(int64_t n) {
  const int64_t m = n / 2;
  const int64_t r = std::gcd(m, int64_t{12});
  auto result = [&](int64_t value, const char* tail) {
    std::string branch = "even/r=" + std::to_string(r);
    if (*tail != '\0') branch += std::string("/") + tail;
    return Make(n, m, r, value, std::move(branch));
  };
  const bool is_28_mod_32 = n % 32 == 28;
  switch (r) {
    case 1:
      return result(12, "");
    case 2:
      return is_28_mod_32 ? result(12, "28-mod-32")
                          : result(6, "not-28-mod-32");
    case 3:
      return SumOfTwoSquaresCriterion(n / 6) ? result(4, "Euler")
                                             : result(8, "non-Euler");
    case 4:
      if (IsSquare(n / 2)) return result(3, "n-2-square");
      if (!IsLegendreForm(n)) return result(6, "three-squares");
      return result(9, "legendre-fails");
    case 6:
      if (IsSquare(n / 12)) return result(2, "n-12-square");
      if (SumOfTwoSquaresCriterion(n / 6)) return result(4, "Euler");
      return is_28_mod_32 ? result(8, "28-mod-32")
                          : result(6, "not-28-mod-32");
    case 12:
      if (IsSquare(n / 12)) return result(2, "n-12-square");
      if (IsSquare(n / 2)) return result(3, "n-2-square");
      if (SumOfTwoSquaresCriterion(n / 6)) return result(4, "Euler");
      if (!IsLegendreForm(n)) return result(6, "three-squares");
      return result(7, "legendre-fails");
  }
  throw Error(ErrorCode::kInvalidArgument, "gcd with 12 out of range");
}

BoundResult OddBound(int64_t n) {
  const int64_t m = n / 2;
  if (m == 1) return Make(n, m, 12, 2, "odd/m=1");
  const int64_t r = std::gcd(m - 1, int64_t{12});
  const std::string prefix = "odd/r=" + std::to_string(r);
  if (r <= 4) return Make(n, m, r, 24 / r, prefix);
  if (r == 6) {
    return SumOfTwoSquaresCriterion(n / 3) ? Make(n, m, r, 4, prefix + "/Euler")
                                           : Make(n, m, r, 8, prefix + "/non-Euler");
  }
  if (IsTriangular((n - 3) / 24)) return Make(n, m, r, 2, prefix + "/triangular");
  return SumOfTwoSquaresCriterion(n / 3) ? Make(n, m, r, 4, prefix + "/Euler")
                                         : Make(n, m, r, 6, prefix + "/non-Euler");
}

}  // namespace

BoundResult ClosedFormBound(int64_t n) {
  RequireHalfDimension(n);
  return n % 2 == 0 ? EvenBound(n) : OddBound(n);
}

const std::vector<std::string_view>& AllBranchLabels() {
  static const std::vector<std::string_view> labels = {
      "even/r=1",
      "even/r=2/not-28-mod-32",
      "even/r=2/28-mod-32",
      "even/r=3/Euler",
      "even/r=3/non-Euler",
      "even/r=4/n-2-square",
      "even/r=4/three-squares",
      "even/r=4/legendre-fails",
      "even/r=6/n-12-square",
      "even/r=6/Euler",
      "even/r=6/not-28-mod-32",
      "even/r=6/28-mod-32",
      "even/r=12/n-12-square",
      "even/r=12/n-2-square",
      "even/r=12/Euler",
      "even/r=12/three-squares",
      "even/r=12/legendre-fails",
      "odd/m=1",
      "odd/r=1",
      "odd/r=2",
      "odd/r=3",
      "odd/r=4",
      "odd/r=6/Euler",
      "odd/r=6/non-Euler",
      "odd/r=12/triangular",
      "odd/r=12/Euler",
      "odd/r=12/non-Euler",
  };
  return labels;
}

int64_t GcdParameter(int64_t n) {
  RequireHalfDimension(n);
  const int64_t m = n / 2;
  return n % 2 == 0 ? std::gcd(m, int64_t{12}) : std::gcd(m - 1, int64_t{12});
}

int64_t DivisibilityThmD(int64_t n) {
  return (n % 2 == 0 ? 12 : 24) / GcdParameter(n);
}

int64_t DivisibilityHirzebruch(int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  }
  switch (n % 8) {
    case 1:
    case 5:
      return 8;
    case 2:
    case 6:
    case 7:
      return 4;
    case 3:
    case 4:
      return 2;
    default:
      return 1;
  }
}

DivisibilityResult DivisibilityRefined(int64_t n, bool c1_zero) {
  DivisibilityResult d;
  d.n = n;
  d.c1_zero = c1_zero;
  d.modulus_thm_d = DivisibilityThmD(n);
  d.modulus_hirzebruch = DivisibilityHirzebruch(n);
  d.modulus_refined = std::lcm(d.modulus_thm_d, d.modulus_hirzebruch);
  if (c1_zero && n % 2 == 0 && (n / 2) % 4 == 1) {
    d.modulus_refined = std::lcm(d.modulus_refined, int64_t{8});
  }
  return d;
}

int64_t MinFixedPoints(int64_t n, bool c1_zero) {
  const BoundResult bound = ClosedFormBound(n);
  if (c1_zero && n % 8 == 2 && n % 3 != 0) return 24;
  return bound.value;
}

std::vector<ComparisonRow> ConjectureComparison(int64_t n_max) {
  RequireHalfDimension(n_max);
  std::vector<ComparisonRow> rows;
  for (int64_t n = 2; n <= n_max; ++n) {
    ComparisonRow row;
    row.n = n;
    row.bound = ClosedFormBound(n).value;
    row.kosniowski = n / 2 + 1;
    row.hamiltonian = n + 1;
    row.beats_kosniowski = row.bound >= row.kosniowski;
    row.beats_hamiltonian = row.bound >= row.hamiltonian;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace circlefix
