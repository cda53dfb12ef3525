// Copyright 2026 The Urysohn Toolkit Authors
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

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "urysohn/error.hpp"
#include "urysohn/extension.hpp"
#include "urysohn/independence.hpp"
#include "urysohn/oracle.hpp"

namespace urysohn {
namespace {

using testing::Rng;

Dist D(std::int64_t p, std::int64_t q) { return Dist(p, q); }

FiniteMetricSpace from_rows(std::vector<std::string> labels,
                            const std::vector<std::vector<Dist>>& rows) {
  SquareMatrix<Dist> d(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) d(i, j) = rows[i][j];
  }
  return FiniteMetricSpace(std::move(labels), d);
}

// b1, b2, c, a; a is close to both b's.
FiniteMetricSpace four_points() {
  const Dist z = Dist::zero();
  return from_rows({"b1", "b2", "c", "a"},
                   {{z, D(3, 5), D(2, 5), D(3, 10)},
                    {D(3, 5), z, D(1, 2), D(3, 10)},
                    {D(2, 5), D(1, 2), z, D(2, 5)},
                    {D(3, 10), D(3, 10), D(2, 5), z}});
}

const PointSet kC{2};

TEST(DividesOracle, Examples) {
  FiniteMetricSpace s = four_points();
  EXPECT_TRUE(divides_oracle(s, 3, 0, 1, kC));
  EXPECT_FALSE(divides_oracle(s, 2, 0, 1, kC));
  EXPECT_THROW(divides_oracle(s, 4, 0, 1, kC), LookupError);
}

TEST(IntervalOracle, Examples) {
  FiniteMetricSpace s = four_points();
  EXPECT_EQ(interval_oracle(s, 0, 1, kC, 20),
            Interval(D(1, 5), D(9, 10)).grid_points(20));
  // b1 = b2 over {c}: [0, 2 d(b,c)].
  EXPECT_EQ(interval_oracle(s, 0, 0, kC, 20),
            Interval(Dist::zero(), D(4, 5)).grid_points(20));
  // Empty base: [d(b1,b2)/3, 1].
  EXPECT_EQ(interval_oracle(s, 0, 1, PointSet{}, 15),
            Interval(D(1, 5), Dist::one()).grid_points(15));
  EXPECT_THROW(interval_oracle(s, 0, 1, kC, 0), ArgumentError);
}

TEST(ExtensionOracle, Examples) {
  const Dist z = Dist::zero();
  FiniteMetricSpace s = from_rows(
      {"a", "b", "s"},
      {{z, D(1, 2), D(1, 2)}, {D(1, 2), z, D(3, 5)}, {D(1, 2), D(3, 5), z}});
  ExtensionProblem small(s, {0}, {1}, {}, 2);
  EXPECT_EQ(extension_oracle(small, 0, 20),
            Interval(D(1, 2), D(7, 10)).grid_points(20));
  ExtensionProblem bare(s, {0}, {}, {}, 2);
  EXPECT_EQ(extension_oracle(bare, 0, 10),
            Interval(D(1, 2), Dist::one()).grid_points(10));
}

TEST(ExtensionOracle, DependentPointIsRejected) {
  FiniteMetricSpace s = four_points();
  ExtensionProblem p(s, {3}, {0, 1}, {2}, 2);
  EXPECT_THROW(extension_oracle(p, 3, 12), PreconditionError);
}

TEST(OracleProperties, DividingAgreesWithClosedForm) {
  Rng rng(109);
  int dividing = 0;
  for (int i = 0; i < 80; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(3, 5));
    FiniteMetricSpace s = testing::random_space(rng, n, rng.uniform(1, 12));
    const PointSet all = testing::all_points(n);
    for (int t = 0; t < 10; ++t) {
      const PointSet C = testing::random_subset(rng, all, 0.3);
      const auto a = static_cast<std::size_t>(rng.uniform(0, n - 1));
      const auto b1 = static_cast<std::size_t>(rng.uniform(0, n - 1));
      const auto b2 = static_cast<std::size_t>(rng.uniform(0, n - 1));
      const bool closed = divides_pair(s, a, b1, b2, C);
      EXPECT_EQ(divides_oracle(s, a, b1, b2, C), closed);
      dividing += closed ? 1 : 0;
    }
  }
  EXPECT_GT(dividing, 0);
}

TEST(OracleProperties, SweepsAgreeWithIntervals) {
  Rng rng(113);
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
    FiniteMetricSpace s = testing::random_space(rng, n, rng.uniform(1, 12));
    const PointSet all = testing::all_points(n);
    const PointSet C = testing::random_subset(rng, all, 0.4);
    const auto b1 = static_cast<std::size_t>(rng.uniform(0, n - 1));
    const auto b2 = static_cast<std::size_t>(rng.uniform(0, n - 1));
    const Interval g = gamma_interval(s, b1, b2, C);
    EXPECT_EQ(interval_oracle(s, b1, b2, C, 24), g.grid_points(24));
    if (i % 6 == 0) {
      EXPECT_EQ(interval_oracle(s, b1, b2, C, 12, 6), g.grid_points(12));
    }
  }
}

TEST(OracleProperties, ExtensionSweepsAgreeWithAdmissibleIntervals) {
  Rng rng(127);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(3, 6));
    FiniteMetricSpace s = testing::random_space(rng, n, rng.uniform(1, 12));
    const PointSet all = testing::all_points(n);
    const auto star = static_cast<std::size_t>(rng.uniform(0, n - 1));
    PointSet B = testing::random_subset(rng, all, 0.5);
    PointSet C = testing::random_subset(rng, B, 0.5);
    const auto a = static_cast<std::size_t>(rng.uniform(0, n - 1));
    ExtensionProblem p(s, {a}, B, C, star);
    if (!independent(s, PointSet{a}, p.B(), p.C()).independent) continue;
    EXPECT_EQ(extension_oracle(p, a, 24), admissible_gammas(a, p).grid_points(24));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace urysohn
