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

// Reference computations written directly from the definitions, sharing no
// code with the library beyond the value types.

#ifndef URYSOHN_TESTS_REFERENCE_HPP
#define URYSOHN_TESTS_REFERENCE_HPP

#include <vector>

#include "urysohn/metric_space.hpp"

namespace urysohn::testing {

/// Shortest truncated f-weight over simple paths, found by exhaustive DFS;
/// 1 when no path exists.
inline SquareMatrix<Dist> simple_path_minimum(const PartialSemimetric& p) {
  const std::size_t n = p.size();
  SquareMatrix<Dist> best(n, Dist::one());
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    best(s, s) = Dist::zero();
    seen.assign(n, false);
    seen[s] = true;
    // Recursive lambda over (vertex, accumulated weight).
    auto walk = [&](auto&& self, std::size_t v, const Rational& w) -> void {
      for (std::size_t y = 0; y < n; ++y) {
        if (seen[y] || !p.defined(v, y)) continue;
        Rational next = w + p(v, y).value();
        Dist d = next > Rational(1) ? Dist::one() : Dist(next);
        if (d < best(s, y)) best(s, y) = d;
        seen[y] = true;
        self(self, y, next);
        seen[y] = false;
      }
    };
    walk(walk, s, Rational());
  }
  return best;
}

/// min over c of d(b1,c) + d(b2,c), truncated; 1 over empty C.
inline Dist reference_d_max(const FiniteMetricSpace& s, std::size_t b1,
                            std::size_t b2, const PointSet& C) {
  Rational best(1);
  for (std::size_t c : C) {
    Rational v = s(b1, c).value() + s(b2, c).value();
    if (v < best) best = v;
  }
  return Dist(best);
}

/// max(sup over c of |d(b1,c) - d(b2,c)|, d(b1,b2)/3).
inline Dist reference_d_min(const FiniteMetricSpace& s, std::size_t b1,
                            std::size_t b2, const PointSet& C) {
  Rational best = s(b1, b2).value() / Rational(3);
  for (std::size_t c : C) {
    Rational v = s(b1, c).value() - s(b2, c).value();
    if (v < Rational(0)) v = -v;
    if (v > best) best = v;
  }
  return Dist(best);
}

}  // namespace urysohn::testing

#endif  // URYSOHN_TESTS_REFERENCE_HPP
