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

#ifndef URYSOHN_INDEPENDENCE_HPP
#define URYSOHN_INDEPENDENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "urysohn/metric_space.hpp"

namespace urysohn {

/// Closed interval of distances, possibly empty.
class Interval {
 public:
  Interval() = default;  // empty
  /// Empty when lo > hi.
  Interval(Dist lo, Dist hi);

  bool empty() const noexcept { return !bounds_.has_value(); }
  /// Throws PreconditionError on an empty interval.
  const Dist& lo() const;
  const Dist& hi() const;
  bool contains(const Dist& x) const;
  /// Points of {0, 1/q, ..., 1} inside the interval, ascending.
  std::vector<Dist> grid_points(std::int64_t denominator) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  std::optional<std::pair<Dist, Dist>> bounds_;
};

/// min over c in C of truncated_add(d(b1,c), d(b2,c)); 1 for empty C.
Dist d_max(const FiniteMetricSpace& space, std::size_t b1, std::size_t b2,
           std::span<const std::size_t> C);

/// max(max over c in C of |d(b1,c) - d(b2,c)|, d(b1,b2)/3).
Dist d_min(const FiniteMetricSpace& space, std::size_t b1, std::size_t b2,
           std::span<const std::size_t> C);

/// [d_min, d_max]: the cross distances d(b1^0, b2^1) realized by
/// C-indiscernible sequences starting with (b1, b2). Never empty.
Interval gamma_interval(const FiniteMetricSpace& space, std::size_t b1,
                        std::size_t b2, std::span<const std::size_t> C);

/// Whether tp(a / C b1 b2) divides over C.
bool divides_pair(const FiniteMetricSpace& space, std::size_t a,
                  std::size_t b1, std::size_t b2,
                  std::span<const std::size_t> C);

enum class Equation { d_max, d_min };
std::string_view to_string(Equation e);

/// The first pair (b1, b2) where adding A to C moves d_max or d_min.
struct IndependenceCertificate {
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  Equation equation = Equation::d_max;
  Dist lhs;  // value over A u C
  Dist rhs;  // value over C
};

struct IndependenceResult {
  bool independent = true;
  std::optional<IndependenceCertificate> certificate;
};

/// Forking (= dividing) independence of A from B over C: for all b1, b2 in B,
/// d_max and d_min over A u C equal their values over C. Distinct pairs are
/// scanned before the diagonal pairs (b, b), so certificates prefer them.
IndependenceResult independent(const FiniteMetricSpace& space,
                               std::span<const std::size_t> A,
                               std::span<const std::size_t> B,
                               std::span<const std::size_t> C);

/// The same predicate evaluated pointwise: no a in A and b1, b2 in B with
/// divides_pair(a, b1, b2, C). Kept as an independent cross-check of
/// `independent`.
bool independent_pairwise(const FiniteMetricSpace& space,
                          std::span<const std::size_t> A,
                          std::span<const std::size_t> B,
                          std::span<const std::size_t> C);

/// Labels of the copies in a Gamma witness: "<label>^<copy>".
std::string copy_label(std::string_view label, std::size_t copy);

/// Candidate C-indiscernible sequence of `copies` copies of (b1, b2) with
/// cross distance gamma, on C followed by b1^0, b2^0, b1^1, b2^1, ....
/// Validity is reported, not enforced: the candidate is a metric whenever
/// gamma lies in gamma_interval. Throws ArgumentError if copies < 2.
SpaceCandidate build_gamma_witness(const FiniteMetricSpace& space,
                                   std::size_t b1, std::size_t b2,
                                   std::span<const std::size_t> C,
                                   const Dist& gamma, std::size_t copies);

/// Union of two point sets, order of first occurrence.
PointSet set_union(std::span<const std::size_t> a,
                   std::span<const std::size_t> b);

}  // namespace urysohn

#endif  // URYSOHN_INDEPENDENCE_HPP
