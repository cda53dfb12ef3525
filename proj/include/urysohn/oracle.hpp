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

#ifndef URYSOHN_ORACLE_HPP
#define URYSOHN_ORACLE_HPP

// Brute-force witnesses for the closed-form predicates. Each decision here
// comes from building a concrete configuration and running the metric
// checks on it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "urysohn/extension.hpp"
#include "urysohn/metric_space.hpp"

namespace urysohn {

/// Whether tp(a / C b1 b2) divides over C, decided by amalgamation: for
/// gamma at both ends and the midpoint of the Gamma interval, realize a
/// three-copy indiscernible sequence and ask whether one point can sit at
/// a's distances from every copy.
bool divides_oracle(const FiniteMetricSpace& space, std::size_t a,
                    std::size_t b1, std::size_t b2,
                    std::span<const std::size_t> C);

/// Grid points gamma in {0, 1/q, ..., 1} whose four-copy witness sequence
/// is a metric. Throws ArgumentError if q < 1.
std::vector<Dist> interval_oracle(const FiniteMetricSpace& space,
                                  std::size_t b1, std::size_t b2,
                                  std::span<const std::size_t> C,
                                  std::int64_t q, std::size_t copies = 4);

/// Grid points gamma for which the one-point extension with
/// d(a', b_*) = gamma is a metric with a' independent from B b_* over C.
/// Throws PreconditionError unless independent({a}, B, C).
std::vector<Dist> extension_oracle(const ExtensionProblem& prob,
                                   std::size_t a, std::int64_t q);

}  // namespace urysohn

#endif  // URYSOHN_ORACLE_HPP
