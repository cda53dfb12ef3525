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

#include "urysohn/oracle.hpp"

#include <string>
#include <utility>

#include "urysohn/completion.hpp"
#include "urysohn/error.hpp"
#include "urysohn/independence.hpp"

namespace urysohn {

namespace {

constexpr std::size_t kDividingCopies = 3;

void check_grid(std::int64_t q) {
  if (q < 1) throw ArgumentError("grid denominator must be >= 1");
}

}  // namespace

bool divides_oracle(const FiniteMetricSpace& space, std::size_t a,
                    std::size_t b1, std::size_t b2,
                    std::span<const std::size_t> C) {
  if (a >= space.size()) {
    throw LookupError("point index " + std::to_string(a) + " outside the space");
  }
  Interval gamma = gamma_interval(space, b1, b2, C);
  const Dist samples[3] = {gamma.lo(), gamma.hi(),
                           midpoint(gamma.lo(), gamma.hi())};
  const std::size_t bs[2] = {b1, b2};
  for (const Dist& g : samples) {
    SpaceCandidate seq =
        build_gamma_witness(space, b1, b2, C, g, kDividingCopies);
    if (!seq.valid()) {
      throw Error(ErrorCode::internal,
                  "witness sequence at gamma " + g.to_string() +
                      " is not a metric");
    }
    FiniteMetricSpace witness = seq.space();
    std::vector<std::pair<std::size_t, Dist>> constraints;
    for (std::size_t p = 0; p < C.size(); ++p) {
      constraints.emplace_back(p, space(a, C[p]));
    }
    for (std::size_t l = 0; l < kDividingCopies; ++l) {
      for (std::size_t i = 0; i < 2; ++i) {
        constraints.emplace_back(C.size() + 2 * l + i, space(a, bs[i]));
      }
    }
    PartialSemimetric amalgam = adjoin_point(
        witness, witness.points().fresh("x"), constraints);
    if (!is_consistent(amalgam).consistent) return true;
  }
  return false;
}

std::vector<Dist> interval_oracle(const FiniteMetricSpace& space,
                                  std::size_t b1, std::size_t b2,
                                  std::span<const std::size_t> C,
                                  std::int64_t q, std::size_t copies) {
  check_grid(q);
  std::vector<Dist> accepted;
  for (Dist& g : grid(q)) {
    if (build_gamma_witness(space, b1, b2, C, g, copies).valid()) {
      accepted.push_back(std::move(g));
    }
  }
  return accepted;
}

std::vector<Dist> extension_oracle(const ExtensionProblem& prob,
                                   std::size_t a, std::int64_t q) {
  check_grid(q);
  const std::size_t single[1] = {a};
  if (a >= prob.space().size()) {
    throw LookupError("point index " + std::to_string(a) + " outside the space");
  }
  if (!independent(prob.space(), single, prob.B(), prob.C()).independent) {
    throw PreconditionError("'" + prob.space().label(a) +
                            "' is not independent from B over C");
  }
  std::vector<Dist> accepted;
  for (Dist& g : grid(q)) {
    ExtensionCandidate ext = candidate_extension(a, g, prob);
    if (!ext.candidate.valid()) continue;
    const std::size_t copy[1] = {ext.copy};
    if (independent(ext.candidate.space(), copy, ext.B_star, ext.C)
            .independent) {
      accepted.push_back(std::move(g));
    }
  }
  return accepted;
}

}  // namespace urysohn
