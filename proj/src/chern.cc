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

#include "circlefix/chern.h"

#include <string>

#include "circlefix/error.h"

namespace circlefix {
namespace {

void CheckParity(const ReducedProfile& rp, Parity expected) {
  if (rp.parity != expected) {
    throw Error(ErrorCode::kInvalidArgument, "reduced profile parity mismatch");
  }
  if (rp.m < 0 || rp.counts.size() != static_cast<size_t>(rp.m) + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "reduced profile must have m + 1 entries");
  }
}

// N_{m-k}
int64_t At(const ReducedProfile& rp, int k) { return rp.counts[rp.m - k]; }

}  // namespace

int64_t FixedPointProfile::Total() const {
  int64_t total = 0;
  for (int64_t c : counts) total += c;
  return total;
}

bool FixedPointProfile::IsSymmetric() const {
  for (size_t i = 0, j = counts.size(); i < j--; ++i) {
    if (counts[i] != counts[j]) return false;
  }
  return true;
}

std::optional<std::string> FixedPointProfile::Violation() const {
  if (n < 1) return "n must be positive";
  if (counts.size() != static_cast<size_t>(n) + 1) {
    return "counts must have n + 1 = " + std::to_string(n + 1) +
           " entries, got " + std::to_string(counts.size());
  }
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) return "N_" + std::to_string(i) + " is negative";
  }
  return std::nullopt;
}

int64_t DoubledGCoeff(int64_t i, int64_t n) {
  return 12 * i * (i - 1) + 5 * n - 3 * n * n;
}

int64_t GCoeff(int64_t i, int64_t n) {
  const int64_t twice = DoubledGCoeff(i, n);
  if (twice % 2 != 0) {
    throw Error(ErrorCode::kNonIntegralResult,
                "g(" + std::to_string(i) + ", " + std::to_string(n) + ")");
  }
  return twice / 2;
}

int64_t ChernC1Cn1(const FixedPointProfile& profile) {
  if (auto v = profile.Violation()) throw Error(ErrorCode::kInvalidArgument, *v);
  if (profile.Total() == 0) {
    throw Error(ErrorCode::kEmptyProfile, "no fixed points");
  }
  __int128 twice = 0;
  for (int i = 0; i <= profile.n; ++i) {
    twice += static_cast<__int128>(profile.counts[i]) *
             DoubledGCoeff(i, profile.n);
  }
  if (twice % 2 != 0) {
    throw Error(ErrorCode::kNonIntegralResult, "half-integral Chern number");
  }
  return static_cast<int64_t>(twice / 2);
}

int64_t F1(const ReducedProfile& rp) {
  CheckParity(rp, Parity::kEven);
  int64_t value = At(rp, 0);
  for (int k = 1; k <= rp.m; ++k) value += 2 * At(rp, k);
  return value;
}

int64_t F2(const ReducedProfile& rp) {
  CheckParity(rp, Parity::kOdd);
  int64_t value = 0;
  for (int64_t c : rp.counts) value += 2 * c;
  return value;
}

int64_t G1(const ReducedProfile& rp) {
  CheckParity(rp, Parity::kEven);
  const int64_t m = rp.m;
  int64_t value = -m * At(rp, 0);
  for (int k = 1; k <= rp.m; ++k) {
    value += 2 * (6 * int64_t{k} * k - m) * At(rp, k);
  }
  return value;
}

int64_t G2(const ReducedProfile& rp) {
  CheckParity(rp, Parity::kOdd);
  const int64_t m = rp.m;
  int64_t value = 0;
  for (int k = 0; k <= rp.m; ++k) {
    value += (6 * int64_t{k} * (k + 1) - (m - 1)) * At(rp, k);
  }
  return value;
}

int64_t Objective(const ReducedProfile& rp) {
  return rp.parity == Parity::kEven ? F1(rp) : F2(rp);
}

int64_t Constraint(const ReducedProfile& rp) {
  return rp.parity == Parity::kEven ? G1(rp) : G2(rp);
}

FixedPointProfile Expand(const ReducedProfile& rp) {
  CheckParity(rp, rp.parity);
  const int n = rp.HalfDimension();
  FixedPointProfile full{n, std::vector<int64_t>(n + 1, 0)};
  for (int i = 0; i <= rp.m; ++i) {
    full.counts[i] = rp.counts[i];
    full.counts[n - i] = rp.counts[i];
  }
  return full;
}

ReducedProfile Reduce(const FixedPointProfile& profile) {
  if (auto v = profile.Violation()) throw Error(ErrorCode::kInvalidArgument, *v);
  if (!profile.IsSymmetric()) {
    throw Error(ErrorCode::kInvalidArgument, "profile is not symmetric");
  }
  ReducedProfile rp;
  rp.parity = profile.n % 2 == 0 ? Parity::kEven : Parity::kOdd;
  rp.m = profile.n / 2;
  rp.counts.assign(profile.counts.begin(), profile.counts.begin() + rp.m + 1);
  return rp;
}

ChernPair ProductChern(const ChernPair& a, const ChernPair& b) {
  return {a.c1cn1 * b.euler + b.c1cn1 * a.euler, a.euler * b.euler};
}

HamiltonianClass Dim6HamiltonianClassifier(int64_t c1c2) {
  return c1c2 != 0 ? HamiltonianClass::kHamiltonian
                   : HamiltonianClass::kNonHamiltonian;
}

const char* HamiltonianClassName(HamiltonianClass c) {
  return c == HamiltonianClass::kHamiltonian ? "Hamiltonian" : "NonHamiltonian";
}

}  // namespace circlefix
