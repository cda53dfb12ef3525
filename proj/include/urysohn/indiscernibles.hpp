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

#ifndef URYSOHN_INDISCERNIBLES_HPP
#define URYSOHN_INDISCERNIBLES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "urysohn/metric_space.hpp"

namespace urysohn {

/// Order-invariant distance data of an indiscernible sequence of k-tuples
/// (a^0, a^1, ...): delta(i, j) = d(a^0_i, a^0_j) and
/// eps(i, j) = d(a^0_i, a^1_j). Indices are 0-based.
struct SequenceTemplate {
  SquareMatrix<Dist> delta;
  SquareMatrix<Dist> eps;

  std::size_t k() const noexcept { return delta.size(); }
  friend bool operator==(const SequenceTemplate&,
                         const SequenceTemplate&) = default;
};

/// Points x^l_i of the three-copy unfolding, numbered l * k + i.
struct TemplateCheck {
  bool valid = true;
  std::optional<TriangleViolation> violation;
  std::string reason;  // non-empty when invalid
};

/// The unfolding on copies 0, 1, 2 with d(x^l_i, x^l_j) = delta(i, j) and
/// d(x^l_i, x^m_j) = eps(i, j) for l < m; valid iff it is a pseudometric.
/// Every triangle of a longer unfolding has the order type of one of these.
/// Throws ArgumentError on mismatched dimensions.
TemplateCheck validate_template(const SequenceTemplate& t);

/// The three-copy unfolding itself, labels "x<l>_<i>" (1-based i).
DistanceTable template_unfolding(const SequenceTemplate& t,
                                 std::size_t copies = 3);

/// Min-plus power of a square matrix over (min, truncated_add): entry (i, j)
/// of the r-th power is the lightest walk of exactly r steps from i to j.
/// The 0-th power is the identity (0 on the diagonal, 1 elsewhere).
SquareMatrix<Dist> min_plus_power(const SquareMatrix<Dist>& m,
                                  std::size_t power);

struct CyclicityResult {
  bool cyclic = true;
  /// When not cyclic: indices (i_1, ..., i_n) with
  /// eps(i_n, i_1) > eps(i_1, i_2) + ... + eps(i_{n-1}, i_n).
  std::vector<std::size_t> violating_cycle;
};

/// Whether p(x^1, x^2) u ... u p(x^n, x^1) is satisfiable, decided by
/// comparing eps transposed against the (n-1)-th min-plus power of eps.
/// n = 1 asks whether a tuple can be its own successor.
/// Throws ArgumentError for n = 0 and PreconditionError for an invalid
/// template.
CyclicityResult is_n_cyclic(const SequenceTemplate& t, std::size_t n);

/// Enumerates all k^n index tuples directly. Reference check for
/// is_n_cyclic; no validity precondition.
CyclicityResult cyclicity_oracle(const SequenceTemplate& t, std::size_t n);

/// The partial semimetric on x^l_i (1 <= l <= n) constraining consecutive
/// copies by eps and closing the cycle with f(x^1_i, x^n_j) = eps(j, i).
/// For n = 2 the closing edge would coincide with the forward one, so the
/// cycle closes on a twin copy x^1' glued to x^1 at distance 0.
/// Labels: "x<l>_<i>" (1-based). Throws ArgumentError for n < 2.
PartialSemimetric amalgam_space(const SequenceTemplate& t, std::size_t n);

/// Tuples of length n with eps(i, j) = (j - i + 1)/n for i <= j and
/// (i - j)/n for i > j (1-based), delta(i, j) = (j - i + 1)/n for i < j.
/// Valid, not n-cyclic, (n+1)-cyclic. Throws ArgumentError for n = 0.
SequenceTemplate sopn_witness(std::size_t n);

/// Points a[m,i] (row m, column i): distance 1 within a row, 2/3 across
/// rows. Labels "a<m>_<i>", 0-based.
FiniteMetricSpace tp2_array(std::size_t rows, std::size_t cols);

/// tp2_array(rows, cols) plus a point "x" at distance 1/3 from each listed
/// cell (row, column) and unconstrained elsewhere.
PartialSemimetric tp2_query(
    std::size_t rows, std::size_t cols,
    std::span<const std::pair<std::size_t, std::size_t>> cells);

}  // namespace urysohn

#endif  // URYSOHN_INDISCERNIBLES_HPP
