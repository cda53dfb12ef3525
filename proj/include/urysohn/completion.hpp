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

#ifndef URYSOHN_COMPLETION_HPP
#define URYSOHN_COMPLETION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "urysohn/metric_space.hpp"

namespace urysohn {

/// Shortest-path closure of `p` over the (min, truncated_add) semiring.
///
/// Pairs joined by no f-sequence get distance 1. The result is always a
/// (pseudo)metric and lies pointwise below f on dom(f); it agrees with f on
/// dom(f) exactly when `p` is consistent.
FiniteMetricSpace path_completion(const PartialSemimetric& p);

/// Truncated sum of f along consecutive pairs of `sequence`. Throws
/// InvariantError if some consecutive pair is outside dom(f).
Dist f_sequence_weight(const PartialSemimetric& p,
                       std::span<const std::size_t> sequence);

struct ConsistencyResult {
  bool consistent = true;
  /// When inconsistent: an f-sequence (x_0, ..., x_m) with
  /// f(x_0, x_m) > f[x_0, ..., x_m].
  std::vector<std::size_t> witness;
};

/// Whether some pseudometric extends `p`.
ConsistencyResult is_consistent(const PartialSemimetric& p);

/// Direct enumeration of every f-sequence with m steps, checking
/// f(x_0, x_m) <= f[x_0, ..., x_m]. Exponential in m; this is the reference
/// check for is_consistent on small inputs. Throws ArgumentError if m == 0.
ConsistencyResult check_m_transitive(const PartialSemimetric& p,
                                     std::size_t m);

}  // namespace urysohn

#endif  // URYSOHN_COMPLETION_HPP
