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

#ifndef URYSOHN_EXTENSION_HPP
#define URYSOHN_EXTENSION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "urysohn/independence.hpp"
#include "urysohn/metric_space.hpp"

namespace urysohn {

/// Parameter sets for extending tp(A/B) by a new point b_*.
///
/// B is normalized to B u C, so C is always a subset of B. The space must
/// carry every distance of b_*; if b_* already lies in B the admissible
/// distances collapse to the recorded ones.
class ExtensionProblem {
 public:
  /// Throws LookupError for indices outside the space.
  ExtensionProblem(FiniteMetricSpace space, PointSet A, PointSet B,
                   PointSet C, std::size_t b_star);

  const FiniteMetricSpace& space() const noexcept { return space_; }
  const PointSet& A() const noexcept { return A_; }
  const PointSet& B() const noexcept { return B_; }
  const PointSet& C() const noexcept { return C_; }
  std::size_t b_star() const noexcept { return b_star_; }

  /// delta_b = d_min(b_*, b/C) and eps_b = d_max(b_*, b/C) for the k-th
  /// point of B.
  const Dist& delta(std::size_t k) const { return delta_[k]; }
  const Dist& eps(std::size_t k) const { return eps_[k]; }
  /// d_max(b_*, b_*/C).
  const Dist& self_bound() const noexcept { return self_bound_; }

 private:
  FiniteMetricSpace space_;
  PointSet A_;
  PointSet B_;
  PointSet C_;
  std::size_t b_star_;
  std::vector<Dist> delta_;
  std::vector<Dist> eps_;
  Dist self_bound_;
};

/// min over b in B of truncated_add(d(a,b), delta_b); 1 for empty B.
Dist upper_U(std::size_t a, const ExtensionProblem& prob);

/// max over b in B of max(eps_b -. d(a,b), d(a,b) -. delta_b); 0 for
/// empty B.
Dist lower_L(std::size_t a, const ExtensionProblem& prob);

/// [max(L(a), d_max(b_*,b_*/C)/2), U(a)]: the distances d(a', b_*) for which
/// a copy a' of a over B stays independent from B b_* over C.
/// Throws PreconditionError unless independent({a}, B, C).
Interval admissible_gammas(std::size_t a, const ExtensionProblem& prob);

/// Layout of a one-point extension table: B in order, then b_*, then the
/// copy a'. When b_* is already in B the table holds a fresh zero-distance
/// twin of it instead.
struct ExtensionCandidate {
  SpaceCandidate candidate;
  std::size_t copy = 0;    // index of a'
  std::size_t b_star = 0;  // index of b_*
  PointSet B;              // indices of B in the new table
  PointSet C;              // indices of C in the new table
  PointSet B_star;         // B followed by b_*
};

/// The table on B u {b_*, a'} with a' copying a's distances to B and
/// d(a', b_*) = gamma. Validity is reported, not enforced.
ExtensionCandidate candidate_extension(std::size_t a, const Dist& gamma,
                                       const ExtensionProblem& prob);

/// candidate_extension for an admissible gamma, checked to be a metric with
/// a' independent from B b_* over C. Throws PreconditionError when gamma is
/// outside admissible_gammas.
FiniteMetricSpace extend_one(std::size_t a, const Dist& gamma,
                             const ExtensionProblem& prob);

struct Extension {
  FiniteMetricSpace space;  // B, b_*, then the copies A'
  PointSet copies;          // index in `space` of the copy of A[i]
  std::size_t b_star = 0;
  std::vector<Dist> gammas;  // d(copy of A[i], b_*) = U(A[i])
};

/// Copies A' of A over B (internal distances kept) with d(a', b_*) = U(a)
/// for every a. The result is a metric and A' is independent from B b_*
/// over C. Throws PreconditionError, naming the certificate, unless
/// independent(A, B, C).
Extension extend_all(const ExtensionProblem& prob);

}  // namespace urysohn

#endif  // URYSOHN_EXTENSION_HPP
