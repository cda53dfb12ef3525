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

#include "urysohn/independence.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "urysohn/error.hpp"

namespace urysohn {

Interval::Interval(Dist lo, Dist hi) {
  if (lo <= hi) bounds_.emplace(std::move(lo), std::move(hi));
}

const Dist& Interval::lo() const {
  if (!bounds_) throw PreconditionError("empty interval has no lower bound");
  return bounds_->first;
}

const Dist& Interval::hi() const {
  if (!bounds_) throw PreconditionError("empty interval has no upper bound");
  return bounds_->second;
}

bool Interval::contains(const Dist& x) const {
  return bounds_ && bounds_->first <= x && x <= bounds_->second;
}

std::vector<Dist> Interval::grid_points(std::int64_t denominator) const {
  std::vector<Dist> out;
  for (Dist& g : grid(denominator)) {
    if (contains(g)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

void check_point(const FiniteMetricSpace& space, std::size_t p) {
  if (p >= space.size()) {
    throw LookupError("point index " + std::to_string(p) +
                      " outside a space of " + std::to_string(space.size()) +
                      " points");
  }
}

void check_range(const FiniteMetricSpace& space,
                 std::span<const std::size_t> points) {
  for (std::size_t p : points) check_point(space, p);
}

}  // namespace

Dist d_max(const FiniteMetricSpace& space, std::size_t b1, std::size_t b2,
           std::span<const std::size_t> C) {
  check_point(space, b1);
  check_point(space, b2);
  check_range(space, C);
  Dist best = Dist::one();
  for (std::size_t c : C) {
    Dist through = truncated_add(space(b1, c), space(b2, c));
    if (through < best) best = std::move(through);
  }
  return best;
}

Dist d_min(const FiniteMetricSpace& space, std::size_t b1, std::size_t b2,
           std::span<const std::size_t> C) {
  check_point(space, b1);
  check_point(space, b2);
  check_range(space, C);
  Dist best = third(space(b1, b2));
  for (std::size_t c : C) {
    Dist gap = abs_diff(space(b1, c), space(b2, c));
    if (gap > best) best = std::move(gap);
  }
  return best;
}

Interval gamma_interval(const FiniteMetricSpace& space, std::size_t b1,
                        std::size_t b2, std::span<const std::size_t> C) {
  return Interval(d_min(space, b1, b2, C), d_max(space, b1, b2, C));
}

bool divides_pair(const FiniteMetricSpace& space, std::size_t a,
                  std::size_t b1, std::size_t b2,
                  std::span<const std::size_t> C) {
  check_point(space, a);
  const std::size_t bs[2] = {b1, b2};
  for (std::size_t bi : bs) {
    for (std::size_t bj : bs) {
      const Dist& ai = space(a, bi);
      const Dist& aj = space(a, bj);
      if (truncated_add(ai, aj) < d_max(space, bi, bj, C)) return true;
      if (abs_diff(ai, aj) > d_min(space, bi, bj, C)) return true;
    }
  }
  return false;
}

std::string_view to_string(Equation e) {
  return e == Equation::d_max ? "d_max" : "d_min";
}

PointSet set_union(std::span<const std::size_t> a,
                   std::span<const std::size_t> b) {
  PointSet out(a.begin(), a.end());
  for (std::size_t x : b) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

namespace {

std::optional<IndependenceCertificate> check_pair(
    const FiniteMetricSpace& space, std::size_t b1, std::size_t b2,
    std::span<const std::size_t> AC, std::span<const std::size_t> C) {
  Dist max_ac = d_max(space, b1, b2, AC);
  Dist max_c = d_max(space, b1, b2, C);
  if (max_ac != max_c) {
    return IndependenceCertificate{b1, b2, Equation::d_max, max_ac, max_c};
  }
  Dist min_ac = d_min(space, b1, b2, AC);
  Dist min_c = d_min(space, b1, b2, C);
  if (min_ac != min_c) {
    return IndependenceCertificate{b1, b2, Equation::d_min, min_ac, min_c};
  }
  return std::nullopt;
}

}  // namespace

IndependenceResult independent(const FiniteMetricSpace& space,
                               std::span<const std::size_t> A,
                               std::span<const std::size_t> B,
                               std::span<const std::size_t> C) {
  check_range(space, A);
  check_range(space, B);
  check_range(space, C);
  const PointSet AC = set_union(C, A);
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      if (auto cert = check_pair(space, B[i], B[j], AC, C)) {
        return IndependenceResult{false, std::move(cert)};
      }
    }
  }
  for (std::size_t b : B) {
    if (auto cert = check_pair(space, b, b, AC, C)) {
      return IndependenceResult{false, std::move(cert)};
    }
  }
  return IndependenceResult{};
}

bool independent_pairwise(const FiniteMetricSpace& space,
                          std::span<const std::size_t> A,
                          std::span<const std::size_t> B,
                          std::span<const std::size_t> C) {
  for (std::size_t a : A) {
    for (std::size_t b1 : B) {
      for (std::size_t b2 : B) {
        if (divides_pair(space, a, b1, b2, C)) return false;
      }
    }
  }
  return true;
}

std::string copy_label(std::string_view label, std::size_t copy) {
  return std::string(label) + "^" + std::to_string(copy);
}

SpaceCandidate build_gamma_witness(const FiniteMetricSpace& space,
                                   std::size_t b1, std::size_t b2,
                                   std::span<const std::size_t> C,
                                   const Dist& gamma, std::size_t copies) {
  if (copies < 2) throw ArgumentError("a Gamma witness needs >= 2 copies");
  check_point(space, b1);
  check_point(space, b2);
  check_range(space, C);

  const std::size_t base = C.size();
  const std::size_t n = base + 2 * copies;
  const std::size_t bs[2] = {b1, b2};

  std::vector<std::string> labels;
  labels.reserve(n);
  std::unordered_set<std::string> taken;
  auto claim = [&](std::string label) {
    while (!taken.insert(label).second) label += '\'';
    labels.push_back(std::move(label));
  };
  for (std::size_t c : C) claim(space.label(c));
  for (std::size_t l = 0; l < copies; ++l) {
    for (int i = 0; i < 2; ++i) {
      std::string name = space.label(bs[i]);
      if (b1 == b2) name += (i == 0 ? "_1" : "_2");
      claim(copy_label(name, l));
    }
  }

  const Dist& within = space(b1, b2);
  const Dist stretched = truncated_add(within, gamma);
  const Dist doubled = truncated_add(gamma, gamma);
  Dist same_index[2];
  for (int i = 0; i < 2; ++i) {
    same_index[i] = std::min({d_max(space, bs[i], bs[i], C), stretched, doubled});
  }

  SquareMatrix<Dist> d(n);
  auto set = [&d](std::size_t x, std::size_t y, const Dist& v) {
    d(x, y) = v;
    d(y, x) = v;
  };
  for (std::size_t p = 0; p < base; ++p) {
    for (std::size_t q = p + 1; q < base; ++q) set(p, q, space(C[p], C[q]));
  }
  auto at = [base](std::size_t copy, int i) { return base + 2 * copy + i; };
  for (std::size_t l = 0; l < copies; ++l) {
    set(at(l, 0), at(l, 1), within);
    for (int i = 0; i < 2; ++i) {
      for (std::size_t p = 0; p < base; ++p) set(at(l, i), p, space(bs[i], C[p]));
    }
    for (std::size_t m = l + 1; m < copies; ++m) {
      for (int i = 0; i < 2; ++i) {
        set(at(l, i), at(m, i), same_index[i]);
        set(at(l, i), at(m, 1 - i), gamma);
      }
    }
  }
  return make_candidate(DistanceTable(PointLabels(std::move(labels)), std::move(d)));
}

}  // namespace urysohn
