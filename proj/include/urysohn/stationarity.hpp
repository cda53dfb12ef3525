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

#ifndef URYSOHN_STATIONARITY_HPP
#define URYSOHN_STATIONARITY_HPP

#include <cstddef>
#include <span>

#include "urysohn/metric_space.hpp"

namespace urysohn {

/// max over c in C of |d(a,c) - d(b,c)|; 0 for empty C.
Dist dstar_min(const FiniteMetricSpace& space, std::size_t a, std::size_t b,
               std::span<const std::size_t> C);

/// Whether tp(a/C) has a unique (equivalently, a unique nonforking)
/// extension to C b: d_max(a, b/C) = dstar_min(a, b/C).
bool has_unique_extension(const FiniteMetricSpace& space, std::size_t a,
                          std::size_t b, std::span<const std::size_t> C);

/// Whether tp(a_tuple/C) is stationary: every coordinate lies in the closure
/// of C, which for a finite C means at distance 0 from one of its points.
bool is_stationary(const FiniteMetricSpace& space,
                   std::span<const std::size_t> a_tuple,
                   std::span<const std::size_t> C);

/// Whether tp(a_tuple/C) has a unique extension to B: has_unique_extension
/// for every coordinate and every b in B. Throws PreconditionError unless
/// C is a subset of B.
bool unique_extension_to(const FiniteMetricSpace& space,
                         std::span<const std::size_t> a_tuple,
                         std::span<const std::size_t> C,
                         std::span<const std::size_t> B);

}  // namespace urysohn

#endif  // URYSOHN_STATIONARITY_HPP
