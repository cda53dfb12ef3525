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

#include "urysohn/indiscernibles.hpp"

#include <algorithm>

#include "urysohn/error.hpp"

namespace urysohn {

namespace {

std::string point_label(std::size_t copy, std::size_t i) {
  return "x" + std::to_string(copy) + "_" + std::to_string(i + 1);
}

void check_shape(const SequenceTemplate& t) {
  if (t.k() == 0) throw ArgumentError("template tuples must have length >= 1");
  if (t.eps.size() != t.k()) {
    throw ArgumentError("delta is " + std::to_string(t.k()) + "x" +
                        std::to_string(t.k()) + " but eps is " +
                        std::to_string(t.eps.size()) + "x" +
                        std::to_string(t.eps.size()));
  }
}

}  // namespace

DistanceTable template_unfolding(const SequenceTemplate& t,
                                 std::size_t copies) {
  check_shape(t);
  const std::size_t k = t.k();
  std::vector<std::string> labels;
  SquareMatrix<Dist> d(copies * k);
  for (std::size_t l = 0; l < copies; ++l) {
    for (std::size_t i = 0; i < k; ++i) labels.push_back(point_label(l, i));
  }
  for (std::size_t l = 0; l < copies; ++l) {
    for (std::size_t m = l; m < copies; ++m) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const Dist& v = (l == m) ? t.delta(i, j) : t.eps(i, j);
          d(l * k + i, m * k + j) = v;
          d(m * k + j, l * k + i) = v;
        }
      }
    }
  }
  return DistanceTable(PointLabels(std::move(labels)), std::move(d));
}

TemplateCheck validate_template(const SequenceTemplate& t) {
  check_shape(t);
  const std::size_t k = t.k();
  for (std::size_t i = 0; i < k; ++i) {
    if (!t.delta(i, i).is_zero()) {
      return {false, std::nullopt,
              "delta(" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                  ") is not 0"};
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (t.delta(i, j) != t.delta(j, i)) {
        return {false, std::nullopt,
                "delta is not symmetric at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")"};
      }
    }
  }
  DistanceTable unfolding = template_unfolding(t, 3);
  if (auto v = find_triangle_violation(unfolding.matrix())) {
    return {false, v,
            "triangle (" + unfolding.label(v->x) + ", " +
                unfolding.label(v->y) + ", " + unfolding.label(v->z) +
                ") of the three-copy unfolding fails"};
  }
  return {};
}

SquareMatrix<Dist> min_plus_power(const SquareMatrix<Dist>& m,
                                  std::size_t power) {
  const std::size_t k = m.size();
  SquareMatrix<Dist> acc(k, Dist::one());
  for (std::size_t i = 0; i < k; ++i) acc(i, i) = Dist::zero();
  for (std::size_t r = 0; r < power; ++r) {
    SquareMatrix<Dist> next(k, Dist::one());
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t h = 0; h < k; ++h) {
          Dist w = truncated_add(acc(i, h), m(h, j));
          if (w < next(i, j)) next(i, j) = std::move(w);
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

CyclicityResult is_n_cyclic(const SequenceTemplate& t, std::size_t n) {
  if (n == 0) throw ArgumentError("cyclicity needs n >= 1");
  if (TemplateCheck check = validate_template(t); !check.valid) {
    throw PreconditionError("template is not realizable: " + check.reason);
  }
  const std::size_t k = t.k();
  const std::size_t steps = n - 1;

  // Layered min-plus powers; last_hop[r](i, j) is the vertex preceding j on
  // a lightest r-step walk from i.
  SquareMatrix<Dist> walk(k, Dist::one());
  for (std::size_t i = 0; i < k; ++i) walk(i, i) = Dist::zero();
  std::vector<SquareMatrix<std::size_t>> last_hop;
  last_hop.reserve(steps);
  for (std::size_t r = 0; r < steps; ++r) {
    SquareMatrix<Dist> next(k);
    SquareMatrix<std::size_t> hop(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t h = 0; h < k; ++h) {
          Dist w = truncated_add(walk(i, h), t.eps(h, j));
          if (h == 0 || w < next(i, j)) {
            next(i, j) = std::move(w);
            hop(i, j) = h;
          }
        }
      }
    }
    walk = std::move(next);
    last_hop.push_back(std::move(hop));
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (t.eps(j, i) <= walk(i, j)) continue;
      std::vector<std::size_t> cycle(n);
      cycle[n - 1] = j;
      for (std::size_t r = steps; r > 0; --r) {
        cycle[r - 1] = last_hop[r - 1](i, cycle[r]);
      }
      return {false, std::move(cycle)};
    }
  }
  return {};
}

CyclicityResult cyclicity_oracle(const SequenceTemplate& t, std::size_t n) {
  if (n == 0) throw ArgumentError("cyclicity needs n >= 1");
  check_shape(t);
  const std::size_t k = t.k();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Rational sum;
    for (std::size_t s = 0; s + 1 < n; ++s) {
      sum = sum + t.eps(idx[s], idx[s + 1]).value();
    }
    // eps <= 1, so comparing with the untruncated sum is the same test.
    if (t.eps(idx[n - 1], idx[0]).value() > sum) return {false, idx};
    std::size_t pos = n;
    while (pos > 0 && ++idx[pos - 1] == k) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return {};
}

PartialSemimetric amalgam_space(const SequenceTemplate& t, std::size_t n) {
  if (n < 2) throw ArgumentError("an amalgam needs n >= 2 copies");
  check_shape(t);
  const std::size_t k = t.k();
  const bool twin = (n == 2);

  std::vector<std::string> labels;
  for (std::size_t l = 1; l <= n; ++l) {
    for (std::size_t i = 0; i < k; ++i) labels.push_back(point_label(l, i));
  }
  if (twin) {
    for (std::size_t i = 0; i < k; ++i) {
      labels.push_back("x1'_" + std::to_string(i + 1));
    }
  }
  PartialSemimetric f{PointLabels(std::move(labels))};
  auto at = [k](std::size_t copy, std::size_t i) { return (copy - 1) * k + i; };

  const std::size_t blocks = twin ? n + 1 : n;
  for (std::size_t l = 1; l <= blocks; ++l) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        f.define(at(l, i), at(l, j), t.delta(i, j));
      }
    }
  }
  for (std::size_t l = 1; l < n; ++l) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        f.define(at(l, i), at(l + 1, j), t.eps(i, j));
      }
    }
  }
  // Closing edge: copy n precedes copy 1.
  const std::size_t first = twin ? n + 1 : 1;
  if (twin) {
    for (std::size_t i = 0; i < k; ++i) {
      f.define(at(1, i), at(first, i), Dist::zero());
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      f.define(at(first, i), at(n, j), t.eps(j, i));
    }
  }
  return f;
}

SequenceTemplate sopn_witness(std::size_t n) {
  if (n == 0) throw ArgumentError("SOP_n witness needs n >= 1");
  const auto den = static_cast<std::int64_t>(n);
  SequenceTemplate t{SquareMatrix<Dist>(n), SquareMatrix<Dist>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto di = static_cast<std::int64_t>(i);
      const auto dj = static_cast<std::int64_t>(j);
      t.eps(i, j) = (i <= j) ? Dist(dj - di + 1, den) : Dist(di - dj, den);
      if (i != j) {
        t.delta(i, j) = Dist(std::max(di, dj) - std::min(di, dj) + 1, den);
      }
    }
  }
  if (!validate_template(t).valid || is_n_cyclic(t, n).cyclic ||
      !is_n_cyclic(t, n + 1).cyclic) {
    throw Error(ErrorCode::internal,
                "SOP_n witness postcondition failed for n = " +
                    std::to_string(n));
  }
  return t;
}

FiniteMetricSpace tp2_array(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw ArgumentError("TP_2 array needs at least one row and one column");
  }
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t i = 0; i < cols; ++i) {
      labels.push_back("a" + std::to_string(m) + "_" + std::to_string(i));
    }
  }
  const std::size_t n = rows * cols;
  SquareMatrix<Dist> d(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      d(p, q) = (p / cols == q / cols) ? Dist::one() : Dist(2, 3);
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

PartialSemimetric tp2_query(
    std::size_t rows, std::size_t cols,
    std::span<const std::pair<std::size_t, std::size_t>> cells) {
  FiniteMetricSpace array = tp2_array(rows, cols);
  std::vector<std::pair<std::size_t, Dist>> constraints;
  for (const auto& [row, col] : cells) {
    if (row >= rows || col >= cols) {
      throw LookupError("cell (" + std::to_string(row) + "," +
                        std::to_string(col) + ") outside the array");
    }
    constraints.emplace_back(row * cols + col, Dist(1, 3));
  }
  return adjoin_point(array, array.points().fresh("x"), constraints);
}

}  // namespace urysohn
