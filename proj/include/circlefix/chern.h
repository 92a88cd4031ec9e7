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

#ifndef CIRCLEFIX_CHERN_H_
#define CIRCLEFIX_CHERN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circlefix {

// Fixed-point counts N_0..N_n of a circle action on a 2n-manifold, indexed by
// the number of negative isotropy weights. In the Hamiltonian case the same
// vector holds the even Betti numbers b_0, b_2, ..., b_2n.
struct FixedPointProfile {
  int n = 0;
  std::vector<int64_t> counts;

  int64_t Total() const;
  bool IsSymmetric() const;
  // First violated structural invariant, or nullopt. Symmetry is not
  // checked here.
  std::optional<std::string> Violation() const;

  friend bool operator==(const FixedPointProfile&,
                         const FixedPointProfile&) = default;
};

enum class Parity { kEven, kOdd };

// Independent coordinates N_0..N_m of a symmetric profile, with n = 2m
// (kEven) or n = 2m + 1 (kOdd).
struct ReducedProfile {
  Parity parity = Parity::kEven;
  int m = 0;
  std::vector<int64_t> counts;

  int HalfDimension() const { return parity == Parity::kEven ? 2 * m : 2 * m + 1; }

  friend bool operator==(const ReducedProfile&, const ReducedProfile&) = default;
  friend auto operator<=>(const ReducedProfile&, const ReducedProfile&) = default;
};

// (c_1 c_{n-1}[M], c_n[M]); the second entry is the fixed-point count when
// the fixed set is discrete.
struct ChernPair {
  int64_t c1cn1 = 0;
  int64_t euler = 0;

  friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

enum class HamiltonianClass { kHamiltonian, kNonHamiltonian };

// 2 * g(i, n) = 12 i (i - 1) + 5n - 3n^2, always an integer.
int64_t DoubledGCoeff(int64_t i, int64_t n);
// g(i, n). Throws kNonIntegralResult if the doubled value is odd.
int64_t GCoeff(int64_t i, int64_t n);

// c_1 c_{n-1}[M] = sum_i N_i g(i, n). Throws kInvalidArgument for malformed
// profiles and kEmptyProfile when every count is zero.
int64_t ChernC1Cn1(const FixedPointProfile& profile);

// Total fixed-point count of the symmetric expansion.
int64_t F1(const ReducedProfile& rp);
int64_t F2(const ReducedProfile& rp);
// Reduced form of the vanishing condition: c_1 c_{n-1} = G1 (n even) or
// 2 * G2 (n odd).
int64_t G1(const ReducedProfile& rp);
int64_t G2(const ReducedProfile& rp);

// Objective / constraint for either parity.
int64_t Objective(const ReducedProfile& rp);
int64_t Constraint(const ReducedProfile& rp);

FixedPointProfile Expand(const ReducedProfile& rp);
// Inverse of Expand. Throws kInvalidArgument for asymmetric profiles.
ReducedProfile Reduce(const FixedPointProfile& profile);

// gamma = c1cn1 / euler is additive and euler multiplicative under products.
ChernPair ProductChern(const ChernPair& a, const ChernPair& b);

// For a 6-dimensional symplectic S^1-manifold with nonempty discrete fixed
// set, the action is Hamiltonian iff c_1 c_2[M] != 0.
HamiltonianClass Dim6HamiltonianClassifier(int64_t c1c2);

const char* HamiltonianClassName(HamiltonianClass c);

}  // namespace circlefix

#endif  // CIRCLEFIX_CHERN_H_
