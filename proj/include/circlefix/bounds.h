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

#ifndef CIRCLEFIX_BOUNDS_H_
#define CIRCLEFIX_BOUNDS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace circlefix {

// Minimal fixed-point count for a 2n-dimensional almost complex S^1-manifold
// with c_1 c_{n-1}[M] = 0.
//
// For n = 2m, r = gcd(m, 12) and value = 12 l / r. For n = 2m + 1,
// r = gcd(m - 1, 12) and value = 24 l / r (with r = 12 when m = 1). `branch`
// names the case that fired; the strings are stable:
//
//   even/r=1
//   even/r=2/not-28-mod-32        even/r=2/28-mod-32
//   even/r=3/Euler                even/r=3/non-Euler
//   even/r=4/n-2-square           even/r=4/three-squares
//   even/r=4/legendre-fails
//   even/r=6/n-12-square          even/r=6/Euler
//   even/r=6/not-28-mod-32        even/r=6/28-mod-32
//   even/r=12/n-12-square         even/r=12/n-2-square
//   even/r=12/Euler               even/r=12/three-squares
//   even/r=12/legendre-fails
//   odd/m=1
//   odd/r=1  odd/r=2  odd/r=3  odd/r=4
//   odd/r=6/Euler                 odd/r=6/non-Euler
//   odd/r=12/triangular           odd/r=12/Euler
//   odd/r=12/non-Euler
struct BoundResult {
  int64_t n = 0;
  int64_t m = 0;
  int64_t r = 0;
  int64_t value = 0;
  std::string branch;
  int64_t l = 0;
};

struct DivisibilityResult {
  int64_t n = 0;
  int64_t modulus_thm_d = 0;
  int64_t modulus_hirzebruch = 0;
  int64_t modulus_refined = 0;
  bool c1_zero = false;
};

struct ComparisonRow {
  int64_t n = 0;
  int64_t bound = 0;
  int64_t kosniowski = 0;   // floor(n/2) + 1
  int64_t hamiltonian = 0;  // n + 1
  bool beats_kosniowski = false;
  bool beats_hamiltonian = false;
};

// Throws kUnsupportedHalfDimension for n < 2.
BoundResult ClosedFormBound(int64_t n);

// All branch labels ClosedFormBound can return, in declaration order.
const std::vector<std::string_view>& AllBranchLabels();

// gcd(m, 12) for even n, gcd(m - 1, 12) for odd n.
int64_t GcdParameter(int64_t n);

// 12 / r (n even) or 24 / r (n odd).
int64_t DivisibilityThmD(int64_t n);

// Divisibility of c_n[M] under c_1 c_{n-1} = 0: 8, 4, 2 by n mod 8, and 1
// for n = 0 (mod 8).
int64_t DivisibilityHirzebruch(int64_t n);

// lcm of the two moduli above, times the factor 8 when c_1 = 0 and n = 2m
// with m = 1 (mod 4).
DivisibilityResult DivisibilityRefined(int64_t n, bool c1_zero);

// 24 when c_1 = 0, n = 2 (mod 8) and 3 does not divide n; otherwise the
// closed form bound.
int64_t MinFixedPoints(int64_t n, bool c1_zero);

// Rows for 2 <= n <= n_max.
std::vector<ComparisonRow> ConjectureComparison(int64_t n_max);

}  // namespace circlefix

#endif  // CIRCLEFIX_BOUNDS_H_
