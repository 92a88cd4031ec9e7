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

#ifndef CIRCLEFIX_TOOLS_REFERENCE_TABLES_H_
#define CIRCLEFIX_TOOLS_REFERENCE_TABLES_H_

#include <array>
#include <cstdint>
#include <string_view>

namespace circlefix::cli {

// Published examples that exercise every case of the closed-form bound.
struct ReferenceRow {
  int64_t n;
  int64_t m;
  int64_t r;
  int64_t bound;
  std::string_view branch;
};

// Even half-dimensions, by increasing r.
inline constexpr std::array<ReferenceRow, 17> kEvenReference = {{
    {26, 13, 1, 12, "even/r=1"},
    {20, 10, 2, 6, "even/r=2/not-28-mod-32"},
    {28, 14, 2, 12, "even/r=2/28-mod-32"},
    {54, 27, 3, 4, "even/r=3/Euler"},
    {18, 9, 3, 8, "even/r=3/non-Euler"},
    {32, 16, 4, 3, "even/r=4/n-2-square"},
    {40, 20, 4, 6, "even/r=4/three-squares"},
    {112, 56, 4, 9, "even/r=4/legendre-fails"},
    {108, 54, 6, 2, "even/r=6/n-12-square"},
    {60, 30, 6, 4, "even/r=6/Euler"},
    {180, 90, 6, 6, "even/r=6/not-28-mod-32"},
    {252, 126, 6, 8, "even/r=6/28-mod-32"},
    {48, 24, 12, 2, "even/r=12/n-12-square"},
    {72, 36, 12, 3, "even/r=12/n-2-square"},
    {24, 12, 12, 4, "even/r=12/Euler"},
    {144, 72, 12, 6, "even/r=12/three-squares"},
    {1008, 504, 12, 7, "even/r=12/legendre-fails"},
}};

// Odd half-dimensions with r = 6 or 12, where r = gcd(m - 1, 12).
inline constexpr std::array<ReferenceRow, 5> kOddReference = {{
    {39, 19, 6, 4, "odd/r=6/Euler"},
    {63, 31, 6, 8, "odd/r=6/non-Euler"},
    {75, 37, 12, 2, "odd/r=12/triangular"},
    {51, 25, 12, 4, "odd/r=12/Euler"},
    {99, 49, 12, 6, "odd/r=12/non-Euler"},
}};

}  // namespace circlefix::cli

#endif  // CIRCLEFIX_TOOLS_REFERENCE_TABLES_H_
