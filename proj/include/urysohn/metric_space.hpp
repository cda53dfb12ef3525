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

#ifndef URYSOHN_METRIC_SPACE_HPP
#define URYSOHN_METRIC_SPACE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "urysohn/dist.hpp"

namespace urysohn {

/// Row-major n x n matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T())
      : n_(n), cells_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

using PointSet = std::vector<std::size_t>;

/// Ordered list of distinct point labels with reverse lookup.
class PointLabels {
 public:
  PointLabels() = default;
  explicit PointLabels(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& all() const noexcept { return labels_; }

  bool contains(std::string_view label) const;
  /// Throws LookupError for unknown labels.
  std::size_t index(std::string_view label) const;
  PointSet indices(std::span<const std::string> labels) const;

  /// `base` if absent, otherwise `base` with enough primes appended to be new.
  std::string fresh(std::string_view base) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// d(x, z) > truncated_add(d(x, y), d(y, z)).
struct TriangleViolation {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
};

/// Labeled symmetric matrix of distances with a zero diagonal. No triangle
/// inequality is implied; see FiniteMetricSpace.
class DistanceTable {
 public:
  DistanceTable() = default;
  /// Checks symmetry and the zero diagonal.
  DistanceTable(PointLabels points, SquareMatrix<Dist> distances);

  std::size_t size() const noexcept { return points_.size(); }
  const PointLabels& points() const noexcept { return points_; }
  const std::string& label(std::size_t i) const { return points_[i]; }
  std::size_t index(std::string_view label) const {
    return points_.index(label);
  }
  const Dist& operator()(std::size_t i, std::size_t j) const {
    return d_(i, j);
  }
  const SquareMatrix<Dist>& matrix() const noexcept { return d_; }

  friend bool operator==(const DistanceTable& a, const DistanceTable& b) {
    return a.points_.all() == b.points_.all() && a.d_ == b.d_;
  }

 private:
  PointLabels points_;
  SquareMatrix<Dist> d_;
};

/// First violating triple in lexicographic (x, z, y) order, if any.
std::optional<TriangleViolation> find_triangle_violation(
    const SquareMatrix<Dist>& d);

/// A DistanceTable that satisfies the truncated triangle inequality.
/// Distinct points at distance 0 (pseudometric twins) are allowed.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  /// Throws InvariantError naming the first violated triangle.
  explicit FiniteMetricSpace(DistanceTable table);
  FiniteMetricSpace(std::vector<std::string> labels,
                    SquareMatrix<Dist> distances);

  std::size_t size() const noexcept { return table_.size(); }
  const PointLabels& points() const noexcept { return table_.points(); }
  const std::string& label(std::size_t i) const { return table_.label(i); }
  std::size_t index(std::string_view label) const {
    return table_.index(label);
  }
  PointSet indices(std::span<const std::string> labels) const {
    return table_.points().indices(labels);
  }
  const Dist& operator()(std::size_t i, std::size_t j) const {
    return table_(i, j);
  }
  const Dist& distance(std::string_view a, std::string_view b) const {
    return table_(index(a), index(b));
  }
  const DistanceTable& table() const noexcept { return table_; }

  friend bool operator==(const FiniteMetricSpace&,
                         const FiniteMetricSpace&) = default;

 private:
  DistanceTable table_;
};

/// A total table whose triangle validity is reported rather than enforced.
struct SpaceCandidate {
  DistanceTable table;
  std::optional<TriangleViolation> violation;

  bool valid() const noexcept { return !violation.has_value(); }
  /// Throws InvariantError when invalid.
  FiniteMetricSpace space() const;
};

SpaceCandidate make_candidate(DistanceTable table);

/// Collapses classes of points at distance 0 to their first member.
struct Quotient {
  FiniteMetricSpace space;
  /// representative[i] is the index in `space` of original point i.
  std::vector<std::size_t> representative;
};
Quotient metric_quotient(const FiniteMetricSpace& space);

/// Symmetric partial distance function with a zero diagonal.
class PartialSemimetric {
 public:
  PartialSemimetric() = default;
  explicit PartialSemimetric(PointLabels points);

  std::size_t size() const noexcept { return points_.size(); }
  const PointLabels& points() const noexcept { return points_; }
  const std::string& label(std::size_t i) const { return points_[i]; }
  std::size_t index(std::string_view label) const {
    return points_.index(label);
  }

  /// Defines f(i, j) = f(j, i) = v. Diagonal values must be 0; redefining a
  /// pair with a different value throws InvariantError.
  void define(std::size_t i, std::size_t j, const Dist& v);
  void define(std::string_view a, std::string_view b, const Dist& v) {
    define(index(a), index(b), v);
  }
  bool defined(std::size_t i, std::size_t j) const {
    return f_(i, j).has_value();
  }
  const Dist& operator()(std::size_t i, std::size_t j) const {
    return *f_(i, j);
  }
  /// Off-diagonal pairs in dom.
  std::size_t defined_pairs() const;

  static PartialSemimetric from_table(const DistanceTable& table);
  static PartialSemimetric from_space(const FiniteMetricSpace& space) {
    return from_table(space.table());
  }

  friend bool operator==(const PartialSemimetric& a,
                         const PartialSemimetric& b) {
    return a.points_.all() == b.points_.all() && a.f_ == b.f_;
  }

 private:
  PointLabels points_;
  SquareMatrix<std::optional<Dist>> f_;
};

/// `space` plus one new point constrained only at the listed distances.
PartialSemimetric adjoin_point(
    const FiniteMetricSpace& space, const std::string& label,
    std::span<const std::pair<std::size_t, Dist>> constraints);

}  // namespace urysohn

#endif  // URYSOHN_METRIC_SPACE_HPP
