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

#ifndef URYSOHN_DIST_HPP
#define URYSOHN_DIST_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "urysohn/rational.hpp"

namespace urysohn {

/// A distance: an exact rational in [0, 1].
class Dist {
 public:
  Dist() = default;
  /// num/den; throws InvariantError when the value leaves [0, 1].
  Dist(std::int64_t num, std::int64_t den);
  explicit Dist(Rational value);

  static Dist zero() { return Dist(); }
  static Dist one() { return Dist(1, 1); }

  /// Wire grammar: "p/q" in lowest terms with q >= 1, or the shorthands
  /// "0" and "1". No signs, no whitespace.
  static Dist parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.sign() == 0; }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const Dist&, const Dist&) = default;
  friend std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Dist& d);

/// min(1, r + s).
Dist truncated_add(const Dist& r, const Dist& s);

/// max(0, r - s).
Dist dotminus(const Dist& r, const Dist& s);

/// |r - s|.
Dist abs_diff(const Dist& r, const Dist& s);

/// r / 2 and r / 3, exact.
Dist half(const Dist& r);
Dist third(const Dist& r);

/// (r + s) / 2 without truncating the sum.
Dist midpoint(const Dist& r, const Dist& s);

/// Whether lhs <= truncated_add(s1, s2); the triangle test.
inline bool within_sum(const Dist& lhs, const Dist& s1, const Dist& s2) {
  return Rational::compare_sum(lhs.value(), s1.value(), s2.value()) >= 0;
}

/// The grid {0, 1/q, ..., q/q}.
std::vector<Dist> grid(std::int64_t denominator);

}  // namespace urysohn

#endif  // URYSOHN_DIST_HPP
