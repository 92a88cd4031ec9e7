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

#include <gtest/gtest.h>

#include "circlefix/bounds.h"
#include "circlefix/error.h"

namespace circlefix {
namespace {

TEST(MinimizeTest, Examples) {
  const MinimizationOutcome two = Minimize(2);
  EXPECT_EQ(two.minimum, 12);
  EXPECT_EQ(two.witness.counts, (std::vector<int64_t>{1, 10}));
  EXPECT_EQ(Minimize(32).minimum, 3);
  EXPECT_EQ(Minimize(1008).minimum, 7);
  const MinimizationOutcome three = Minimize(3);
  EXPECT_EQ(three.minimum, 2);
  EXPECT_EQ(three.witness.counts, (std::vector<int64_t>{0, 1}));
  EXPECT_EQ(Minimize(75).minimum, 2);
  EXPECT_EQ(Minimize(99).minimum, 6);
}

TEST(MinimizeTest, WitnessIsFeasibleAndMatchesClosedForm) {
  for (int64_t n = 2; n <= 1010; ++n) {
    const MinimizationOutcome out = Minimize(n);
    const BoundResult b = ClosedFormBound(n);
    ASSERT_EQ(out.minimum, b.value) << n;
    ASSERT_EQ(out.l, b.l) << n;
    ASSERT_EQ(Constraint(out.witness), 0) << n;
    ASSERT_EQ(Objective(out.witness), out.minimum) << n;
    ASSERT_EQ(ChernC1Cn1(Expand(out.witness)), 0) << n;
  }
}

TEST(MinimizeTest, CapExceeded) {
  try {
    Minimize(2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(EnumerateTest, Examples) {
  const auto four = EnumerateFeasible(2, 36);
  ASSERT_EQ(four.size(), 3u);
  EXPECT_EQ(four[0].witness.counts, (std::vector<int64_t>{1, 10}));
  EXPECT_EQ(four[1].witness.counts, (std::vector<int64_t>{2, 20}));
  EXPECT_EQ(four[2].witness.counts, (std::vector<int64_t>{3, 30}));
  EXPECT_EQ(four[2].method, Method::kLatticeEnum);

  const auto six = EnumerateFeasible(3, 6);
  ASSERT_EQ(six.size(), 3u);
  for (size_t i = 0; i < six.size(); ++i) {
    EXPECT_EQ(six[i].minimum, 2 * static_cast<int64_t>(i + 1));
    EXPECT_EQ(six[i].witness.counts[0], 0);
  }

  const auto twelve = EnumerateFeasible(6, 4);
  ASSERT_FALSE(twelve.empty());
  EXPECT_EQ(twelve.front().minimum, 4);
}

// Exhaustive search in a box agrees with the closed form and every feasible
// total respects the divisibility modulus.
TEST(EnumerateTest, AgreesWithClosedForm) {
  for (int64_t n = 2; n <= 24; ++n) {
    const BoundResult b = ClosedFormBound(n);
    const auto all = EnumerateFeasible(n, 24);
    ASSERT_FALSE(all.empty()) << n;
    EXPECT_EQ(all.front().minimum, b.value) << n;
    for (const auto& out : all) {
      EXPECT_EQ(out.minimum % DivisibilityThmD(n), 0) << n;
      EXPECT_EQ(Constraint(out.witness), 0) << n;
    }
  }
}

TEST(EnumerateTest, BoxTooLarge) {
  try {
    EnumerateFeasible(400, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoxTooLarge);
  }
}

TEST(WitnessTest, FullProfiles) {
  EXPECT_EQ(WitnessFullProfile(3), (FixedPointProfile{3, {0, 1, 1, 0}}));
  EXPECT_EQ(WitnessFullProfile(2), (FixedPointProfile{2, {1, 10, 1}}));
  const FixedPointProfile six = WitnessFullProfile(6);
  EXPECT_TRUE(six.IsSymmetric());
  EXPECT_EQ(six.Total(), 4);
  EXPECT_EQ(ChernC1Cn1(six), 0);
}

}  // namespace
}  // namespace circlefix
