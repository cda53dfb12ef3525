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

#include "urysohn/metric_space.hpp"

#include <utility>

#include "urysohn/error.hpp"

namespace urysohn {

PointLabels::PointLabels(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InvariantError("duplicate point label '" + labels_[i] + "'");
    }
  }
}

bool PointLabels::contains(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

std::size_t PointLabels::index(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw LookupError("unknown point '" + std::string(label) + "'");
  }
  return it->second;
}

PointSet PointLabels::indices(std::span<const std::string> labels) const {
  PointSet out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index(l));
  return out;
}

std::string PointLabels::fresh(std::string_view base) const {
  std::string candidate(base);
  while (contains(candidate)) candidate += '\'';
  return candidate;
}

DistanceTable::DistanceTable(PointLabels points, SquareMatrix<Dist> distances)
    : points_(std::move(points)), d_(std::move(distances)) {
  if (d_.size() != points_.size()) {
    throw InvariantError("distance matrix is " + std::to_string(d_.size()) +
                         "x" + std::to_string(d_.size()) + " for " +
                         std::to_string(points_.size()) + " points");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (!d_(i, i).is_zero()) {
      throw InvariantError("d(" + label(i) + "," + label(i) + ") = " +
                           d_(i, i).to_string() + " is not 0");
    }
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (d_(i, j) != d_(j, i)) {
        throw InvariantError("distance between '" + label(i) + "' and '" +
                             label(j) + "' is not symmetric");
      }
    }
  }
}

std::optional<TriangleViolation> find_triangle_violation(
    const SquareMatrix<Dist>& d) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      const Dist& direct = d(x, z);
      if (direct.is_zero()) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        if (!within_sum(direct, d(x, y), d(y, z))) {
          return TriangleViolation{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string describe(const DistanceTable& t, const TriangleViolation& v) {
  return "triangle inequality fails: d(" + t.label(v.x) + "," + t.label(v.z) +
         ") = " + t(v.x, v.z).to_string() + " > d(" + t.label(v.x) + "," +
         t.label(v.y) + ") + d(" + t.label(v.y) + "," + t.label(v.z) +
         ") = " + t(v.x, v.y).to_string() + " + " + t(v.y, v.z).to_string();
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(DistanceTable table)
    : table_(std::move(table)) {
  if (auto v = find_triangle_violation(table_.matrix())) {
    throw InvariantError(describe(table_, *v));
  }
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     SquareMatrix<Dist> distances)
    : FiniteMetricSpace(
          DistanceTable(PointLabels(std::move(labels)), std::move(distances))) {}

FiniteMetricSpace SpaceCandidate::space() const {
  if (violation) throw InvariantError(describe(table, *violation));
  return FiniteMetricSpace(table);
}

SpaceCandidate make_candidate(DistanceTable table) {
  auto violation = find_triangle_violation(table.matrix());
  return SpaceCandidate{std::move(table), violation};
}

Quotient metric_quotient(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> rep(n);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    rep[i] = kept.size();
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (space(i, kept[k]).is_zero()) {
        rep[i] = k;
        break;
      }
    }
    if (rep[i] == kept.size()) kept.push_back(i);
  }
  std::vector<std::string> labels;
  SquareMatrix<Dist> d(kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    labels.push_back(space.label(kept[a]));
    for (std::size_t b = 0; b < kept.size(); ++b) {
      d(a, b) = space(kept[a], kept[b]);
    }
  }
  return Quotient{FiniteMetricSpace(std::move(labels), std::move(d)),
                  std::move(rep)};
}

PartialSemimetric::PartialSemimetric(PointLabels points)
    : points_(std::move(points)), f_(points_.size()) {
  for (std::size_t i = 0; i < size(); ++i) f_(i, i) = Dist::zero();
}

void PartialSemimetric::define(std::size_t i, std::size_t j, const Dist& v) {
  if (i >= size() || j >= size()) {
    throw LookupError("point index out of range");
  }
  if (i == j && !v.is_zero()) {
    throw InvariantError("f(" + label(i) + "," + label(i) + ") must be 0");
  }
  if (f_(i, j) && *f_(i, j) != v) {
    throw InvariantError("conflicting values for f(" + label(i) + "," +
                         label(j) + "): " + f_(i, j)->to_string() + " and " +
                         v.to_string());
  }
  f_(i, j) = v;
  f_(j, i) = v;
}

std::size_t PartialSemimetric::defined_pairs() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) count += defined(i, j);
  }
  return count;
}

PartialSemimetric PartialSemimetric::from_table(const DistanceTable& table) {
  PartialSemimetric p(table.points());
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      p.define(i, j, table(i, j));
    }
  }
  return p;
}

PartialSemimetric adjoin_point(
    const FiniteMetricSpace& space, const std::string& label,
    std::span<const std::pair<std::size_t, Dist>> constraints) {
  std::vector<std::string> labels = space.points().all();
  labels.push_back(label);
  PartialSemimetric p{PointLabels(std::move(labels))};
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      p.define(i, j, space(i, j));
    }
  }
  const std::size_t x = space.size();
  for (const auto& [i, v] : constraints) p.define(x, i, v);
  return p;
}

}  // namespace urysohn
