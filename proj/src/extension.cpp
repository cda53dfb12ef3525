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

#include "urysohn/extension.hpp"

#include <algorithm>
#include <string>

#include "urysohn/error.hpp"

namespace urysohn {

namespace {

void check_point(const FiniteMetricSpace& space, std::size_t p) {
  if (p >= space.size()) {
    throw LookupError("point index " + std::to_string(p) +
                      " outside a space of " + std::to_string(space.size()) +
                      " points");
  }
}

std::string describe(const IndependenceCertificate& cert,
                     const FiniteMetricSpace& space) {
  return std::string(to_string(cert.equation)) + "(" + space.label(cert.b1) +
         "," + space.label(cert.b2) + ") is " + cert.lhs.to_string() +
         " over A u C but " + cert.rhs.to_string() + " over C";
}

std::vector<std::string> labels_of(const FiniteMetricSpace& space,
                                   std::span<const std::size_t> points) {
  std::vector<std::string> out;
  out.reserve(points.size());
  for (std::size_t p : points) out.push_back(space.label(p));
  return out;
}

std::size_t position(const PointSet& set, std::size_t p) {
  return static_cast<std::size_t>(std::find(set.begin(), set.end(), p) -
                                  set.begin());
}

// B, then b_* unless already present: the base of every extension table.
PointSet base_points(const ExtensionProblem& prob) {
  PointSet base = prob.B();
  if (position(base, prob.b_star()) == base.size()) {
    base.push_back(prob.b_star());
  }
  return base;
}

}  // namespace

ExtensionProblem::ExtensionProblem(FiniteMetricSpace space, PointSet A,
                                   PointSet B, PointSet C, std::size_t b_star)
    : space_(std::move(space)),
      A_(std::move(A)),
      B_(set_union(B, C)),
      C_(std::move(C)),
      b_star_(b_star) {
  for (const PointSet* set : {&A_, &B_, &C_}) {
    for (std::size_t p : *set) check_point(space_, p);
  }
  check_point(space_, b_star_);
  delta_.reserve(B_.size());
  eps_.reserve(B_.size());
  for (std::size_t b : B_) {
    delta_.push_back(d_min(space_, b_star_, b, C_));
    eps_.push_back(d_max(space_, b_star_, b, C_));
  }
  self_bound_ = d_max(space_, b_star_, b_star_, C_);
}

Dist upper_U(std::size_t a, const ExtensionProblem& prob) {
  check_point(prob.space(), a);
  Dist best = Dist::one();
  for (std::size_t k = 0; k < prob.B().size(); ++k) {
    Dist v = truncated_add(prob.space()(a, prob.B()[k]), prob.delta(k));
    if (v < best) best = std::move(v);
  }
  return best;
}

Dist lower_L(std::size_t a, const ExtensionProblem& prob) {
  check_point(prob.space(), a);
  Dist best = Dist::zero();
  for (std::size_t k = 0; k < prob.B().size(); ++k) {
    const Dist& dab = prob.space()(a, prob.B()[k]);
    best = std::max({best, dotminus(prob.eps(k), dab),
                     dotminus(dab, prob.delta(k))});
  }
  return best;
}

Interval admissible_gammas(std::size_t a, const ExtensionProblem& prob) {
  check_point(prob.space(), a);
  const std::size_t single[1] = {a};
  IndependenceResult r = independent(prob.space(), single, prob.B(), prob.C());
  if (!r.independent) {
    throw PreconditionError("'" + prob.space().label(a) +
                            "' is not independent from B over C: " +
                            describe(*r.certificate, prob.space()));
  }
  Interval out(std::max(lower_L(a, prob), half(prob.self_bound())),
               upper_U(a, prob));
  if (out.empty()) {
    throw Error(ErrorCode::internal, "empty admissible interval for '" +
                                         prob.space().label(a) + "'");
  }
  return out;
}

ExtensionCandidate candidate_extension(std::size_t a, const Dist& gamma,
                                       const ExtensionProblem& prob) {
  const FiniteMetricSpace& space = prob.space();
  check_point(space, a);
  const PointSet& B = prob.B();
  const bool star_in_B = position(B, prob.b_star()) < B.size();
  // A b_* already in B gets a zero-distance twin carrying gamma, so that
  // gamma != d(a, b_*) shows up as a broken triangle.
  const std::size_t star = B.size();
  const std::size_t copy = B.size() + 1;
  const std::size_t n = B.size() + 2;

  std::vector<std::string> labels = labels_of(space, B);
  std::vector<std::string> taken = space.points().all();
  std::string star_label = space.label(prob.b_star());
  if (star_in_B) {
    star_label = PointLabels(taken).fresh(star_label);
    taken.push_back(star_label);
  }
  labels.push_back(std::move(star_label));
  labels.push_back(PointLabels(taken).fresh(space.label(a)));

  SquareMatrix<Dist> d(n);
  auto set = [&d](std::size_t x, std::size_t y, const Dist& v) {
    d(x, y) = v;
    d(y, x) = v;
  };
  for (std::size_t p = 0; p < B.size(); ++p) {
    for (std::size_t q = p + 1; q < B.size(); ++q) set(p, q, space(B[p], B[q]));
    set(p, star, space(prob.b_star(), B[p]));
    set(p, copy, space(a, B[p]));
  }
  set(star, copy, gamma);

  ExtensionCandidate out;
  out.candidate =
      make_candidate(DistanceTable(PointLabels(std::move(labels)), std::move(d)));
  out.copy = copy;
  out.b_star = star;
  for (std::size_t p = 0; p < B.size(); ++p) out.B.push_back(p);
  for (std::size_t c : prob.C()) out.C.push_back(position(B, c));
  out.B_star = out.B;
  out.B_star.push_back(star);
  return out;
}

FiniteMetricSpace extend_one(std::size_t a, const Dist& gamma,
                             const ExtensionProblem& prob) {
  Interval allowed = admissible_gammas(a, prob);
  if (!allowed.contains(gamma)) {
    throw PreconditionError("gamma " + gamma.to_string() + " is outside [" +
                            allowed.lo().to_string() + ", " +
                            allowed.hi().to_string() + "]");
  }
  ExtensionCandidate ext = candidate_extension(a, gamma, prob);
  if (!ext.candidate.valid()) {
    throw Error(ErrorCode::internal, "admissible extension is not a metric");
  }
  FiniteMetricSpace out = ext.candidate.space();
  const std::size_t copy[1] = {ext.copy};
  if (!independent(out, copy, ext.B_star, ext.C).independent) {
    throw Error(ErrorCode::internal, "admissible extension is not independent");
  }
  return out;
}

Extension extend_all(const ExtensionProblem& prob) {
  const FiniteMetricSpace& space = prob.space();
  IndependenceResult r = independent(space, prob.A(), prob.B(), prob.C());
  if (!r.independent) {
    throw PreconditionError("A is not independent from B over C: " +
                            describe(*r.certificate, space));
  }
  const PointSet base = base_points(prob);
  const bool star_is_new = position(prob.B(), prob.b_star()) == prob.B().size();
  const std::size_t star = position(base, prob.b_star());
  const std::size_t m = prob.A().size();
  const std::size_t n = base.size() + m;

  std::vector<std::string> labels = labels_of(space, base);
  std::vector<std::string> taken = space.points().all();
  Extension out;
  for (std::size_t a : prob.A()) {
    std::string name = PointLabels(taken).fresh(space.label(a));
    taken.push_back(name);
    labels.push_back(std::move(name));
    out.gammas.push_back(upper_U(a, prob));
  }

  SquareMatrix<Dist> d(n);
  auto set = [&d](std::size_t x, std::size_t y, const Dist& v) {
    d(x, y) = v;
    d(y, x) = v;
  };
  for (std::size_t p = 0; p < base.size(); ++p) {
    for (std::size_t q = p + 1; q < base.size(); ++q) {
      set(p, q, space(base[p], base[q]));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ai = prob.A()[i];
    const std::size_t row = base.size() + i;
    out.copies.push_back(row);
    for (std::size_t p = 0; p < base.size(); ++p) {
      set(row, p, (p == star && star_is_new) ? out.gammas[i]
                                             : space(ai, base[p]));
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      set(row, base.size() + j, space(ai, prob.A()[j]));
    }
  }

  SpaceCandidate cand =
      make_candidate(DistanceTable(PointLabels(std::move(labels)), std::move(d)));
  if (!cand.valid()) {
    throw Error(ErrorCode::internal, "extension is not a metric");
  }
  out.space = cand.space();
  out.b_star = star;

  PointSet B_star(base.size());
  for (std::size_t p = 0; p < base.size(); ++p) B_star[p] = p;
  PointSet C;
  for (std::size_t c : prob.C()) C.push_back(position(base, c));
  if (!independent(out.space, out.copies, B_star, C).independent) {
    throw Error(ErrorCode::internal, "extension is not independent");
  }
  return out;
}

}  // namespace urysohn
