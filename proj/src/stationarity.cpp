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

#include "urysohn/stationarity.hpp"

#include <algorithm>
#include <string>

#include "urysohn/error.hpp"
#include "urysohn/independence.hpp"

namespace urysohn {

namespace {

void check_points(const FiniteMetricSpace& space,
                  std::span<const std::size_t> points) {
  for (std::size_t p : points) {
    if (p >= space.size()) {
      throw LookupError("point index " + std::to_string(p) +
                        " outside a space of " + std::to_string(space.size()) +
                        " points");
    }
  }
}

}  // namespace

Dist dstar_min(const FiniteMetricSpace& space, std::size_t a, std::size_t b,
               std::span<const std::size_t> C) {
  const std::size_t ab[2] = {a, b};
  check_points(space, ab);
  check_points(space, C);
  Dist best = Dist::zero();
  for (std::size_t c : C) best = std::max(best, abs_diff(space(a, c), space(b, c)));
  return best;
}

bool has_unique_extension(const FiniteMetricSpace& space, std::size_t a,
                          std::size_t b, std::span<const std::size_t> C) {
  return d_max(space, a, b, C) == dstar_min(space, a, b, C);
}

bool is_stationary(const FiniteMetricSpace& space,
                   std::span<const std::size_t> a_tuple,
                   std::span<const std::size_t> C) {
  check_points(space, a_tuple);
  check_points(space, C);
  return std::all_of(a_tuple.begin(), a_tuple.end(), [&](std::size_t a) {
    return std::any_of(C.begin(), C.end(),
                       [&](std::size_t c) { return space(a, c).is_zero(); });
  });
}

bool unique_extension_to(const FiniteMetricSpace& space,
                         std::span<const std::size_t> a_tuple,
                         std::span<const std::size_t> C,
                         std::span<const std::size_t> B) {
  check_points(space, a_tuple);
  check_points(space, C);
  check_points(space, B);
  for (std::size_t c : C) {
    if (std::find(B.begin(), B.end(), c) == B.end()) {
      throw PreconditionError("C is not a subset of B: '" + space.label(c) +
                              "' is missing");
    }
  }
  for (std::size_t a : a_tuple) {
    for (std::size_t b : B) {
      if (!has_unique_extension(space, a, b, C)) return false;
    }
  }
  return true;
}

}  // namespace urysohn
