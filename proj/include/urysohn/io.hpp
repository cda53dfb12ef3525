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

#ifndef URYSOHN_IO_HPP
#define URYSOHN_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urysohn/independence.hpp"
#include "urysohn/indiscernibles.hpp"
#include "urysohn/metric_space.hpp"

namespace urysohn {

/// Optional parameter-set annotations carried by a space document.
struct Roles {
  std::optional<std::vector<std::string>> A;
  std::optional<std::vector<std::string>> B;
  std::optional<std::vector<std::string>> C;
  std::optional<std::string> b_star;

  bool empty() const noexcept { return !A && !B && !C && !b_star; }
  friend bool operator==(const Roles&, const Roles&) = default;
};

struct DistanceEntry {
  std::string a;
  std::string b;
  Dist d;
  friend bool operator==(const DistanceEntry&, const DistanceEntry&) = default;
};

/// {"points": [...], "distances": [[label, label, "p/q"], ...],
///  "roles": {"A": [...], "B": [...], "C": [...], "b_star": label}}
/// Unknown top-level fields are ignored.
struct SpaceDocument {
  std::vector<std::string> points;
  std::vector<DistanceEntry> distances;
  Roles roles;
  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

/// Throws ParseError naming the offending field, LookupError for labels
/// outside "points".
SpaceDocument parse_space_document(std::string_view text);

/// One line per distance triple, pairs in point order (i < j), zero pairs
/// included. Parsing the output gives back an equal document.
std::string write_space_document(const SpaceDocument& doc);

/// Total table; a missing pair or conflicting duplicate is an
/// InvariantError.
DistanceTable to_table(const SpaceDocument& doc);
FiniteMetricSpace to_space(const SpaceDocument& doc);
PartialSemimetric to_partial(const SpaceDocument& doc);

SpaceDocument to_document(const DistanceTable& table, Roles roles = {});
SpaceDocument to_document(const FiniteMetricSpace& space, Roles roles = {});
SpaceDocument to_document(const PartialSemimetric& p, Roles roles = {});

/// {"k": k, "delta": [[...]], "eps": [[...]]}, rows of "p/q" strings.
SequenceTemplate parse_template(std::string_view text);
std::string write_template(const SequenceTemplate& t);

/// {"pair": [b1, b2], "equation": "d_max" | "d_min", "lhs": ..., "rhs": ...}
std::string write_certificate(const IndependenceCertificate& cert,
                              const FiniteMetricSpace& space);

}  // namespace urysohn

#endif  // URYSOHN_IO_HPP
