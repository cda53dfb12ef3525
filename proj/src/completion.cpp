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

#include "urysohn/completion.hpp"

#include <limits>

#include "urysohn/error.hpp"

namespace urysohn {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Closure {
  SquareMatrix<Dist> d;
  SquareMatrix<std::size_t> next;  // first hop of a shortest f-sequence
};

Closure close(const PartialSemimetric& p) {
  const std::size_t n = p.size();
  Closure c{SquareMatrix<Dist>(n, Dist::one()),
            SquareMatrix<std::size_t>(n, kNone)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.defined(i, j)) {
        c.d(i, j) = p(i, j);
        c.next(i, j) = j;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || c.next(i, k) == kNone) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || c.next(k, j) == kNone) continue;
        // Strict improvement only: a sum that truncates to 1 never wins.
        if (!within_sum(c.d(i, j), c.d(i, k), c.d(k, j))) {
          c.d(i, j) = Dist(c.d(i, k).value() + c.d(k, j).value());
          c.next(i, j) = c.next(i, k);
        }
      }
    }
  }
  return c;
}

std::vector<std::size_t> trace(const Closure& c, std::size_t from,
                               std::size_t to) {
  std::vector<std::size_t> path{from};
  const std::size_t limit = c.d.size() + 1;
  while (from != to) {
    from = c.next(from, to);
    path.push_back(from);
    if (from == kNone || path.size() > limit) {
      throw Error(ErrorCode::internal, "broken shortest-path trace");
    }
  }
  return path;
}

}  // namespace

FiniteMetricSpace path_completion(const PartialSemimetric& p) {
  Closure c = close(p);
  return FiniteMetricSpace(DistanceTable(p.points(), std::move(c.d)));
}

Dist f_sequence_weight(const PartialSemimetric& p,
                       std::span<const std::size_t> sequence) {
  Rational total;
  for (std::size_t t = 0; t + 1 < sequence.size(); ++t) {
    if (!p.defined(sequence[t], sequence[t + 1])) {
      throw InvariantError("(" + p.label(sequence[t]) + "," +
                           p.label(sequence[t + 1]) + ") is not in dom(f)");
    }
    total = total + p(sequence[t], sequence[t + 1]).value();
  }
  return total > Rational(1) ? Dist::one() : Dist(std::move(total));
}

ConsistencyResult is_consistent(const PartialSemimetric& p) {
  Closure c = close(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p.defined(i, j) && c.d(i, j) < p(i, j)) {
        return ConsistencyResult{false, trace(c, i, j)};
      }
    }
  }
  return ConsistencyResult{};
}

namespace {

struct Walker {
  const PartialSemimetric& p;
  std::size_t steps;
  std::vector<std::size_t> seq;
  Dist bound;  // largest f(x_0, y); sums at or above it cannot violate

  bool extend(const Rational& sum) {
    if (seq.size() == steps + 1) {
      std::size_t first = seq.front();
      std::size_t last = seq.back();
      return p.defined(first, last) && p(first, last).value() > sum;
    }
    std::size_t tail = seq.back();
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.defined(tail, y)) continue;
      Rational next = sum + p(tail, y).value();
      if (next >= bound.value()) continue;
      seq.push_back(y);
      if (extend(next)) return true;
      seq.pop_back();
    }
    return false;
  }
};

}  // namespace

ConsistencyResult check_m_transitive(const PartialSemimetric& p,
                                     std::size_t m) {
  if (m == 0) throw ArgumentError("m-transitivity needs m >= 1");
  for (std::size_t start = 0; start < p.size(); ++start) {
    Dist bound;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.defined(start, y) && p(start, y) > bound) bound = p(start, y);
    }
    if (bound.is_zero()) continue;
    Walker w{p, m, {start}, bound};
    if (w.extend(Rational())) return ConsistencyResult{false, w.seq};
  }
  return ConsistencyResult{};
}

}  // namespace urysohn
