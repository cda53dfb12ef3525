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

#include "urysohn/dist.hpp"

#include <ostream>
#include <utility>

#include "urysohn/error.hpp"

namespace urysohn {

namespace {

void require_unit(const Rational& v) {
  if (v.sign() < 0 || v > Rational(1)) {
    throw InvariantError("distance " + v.to_string() + " outside [0,1]");
  }
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Dist::Dist(std::int64_t num, std::int64_t den) : value_(num, den) {
  require_unit(value_);
}

Dist::Dist(Rational value) : value_(std::move(value)) { require_unit(value_); }

Dist Dist::parse(std::string_view text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  auto slash = text.find('/');
  if (slash == std::string_view::npos || !is_digits(text.substr(0, slash)) ||
      !is_digits(text.substr(slash + 1))) {
    throw ParseError("distance '" + std::string(text) +
                     "' is not of the form p/q, 0 or 1");
  }
  Rational num = Rational::parse(text.substr(0, slash));
  Rational den = Rational::parse(text.substr(slash + 1));
  if (den.sign() == 0) {
    throw ParseError("distance '" + std::string(text) +
                     "' has a zero denominator");
  }
  Rational value = num / den;
  if (value > Rational(1)) {
    throw ParseError("distance '" + std::string(text) + "' exceeds 1");
  }
  // Only reduced fractions without leading zeros are accepted; "0/1" and
  // "1/1" are reduced even though they print as "0" and "1".
  if (value.to_string() != text && text != "0/1" && text != "1/1") {
    throw ParseError("distance '" + std::string(text) +
                     "' is not a reduced fraction");
  }
  return Dist(std::move(value));
}

std::ostream& operator<<(std::ostream& os, const Dist& d) {
  return os << d.value();
}

Dist truncated_add(const Dist& r, const Dist& s) {
  Rational sum = r.value() + s.value();
  return sum > Rational(1) ? Dist::one() : Dist(std::move(sum));
}

Dist dotminus(const Dist& r, const Dist& s) {
  return r <= s ? Dist::zero() : Dist(r.value() - s.value());
}

Dist abs_diff(const Dist& r, const Dist& s) {
  return r < s ? Dist(s.value() - r.value()) : Dist(r.value() - s.value());
}

Dist half(const Dist& r) { return Dist(r.value() / Rational(2)); }

Dist third(const Dist& r) { return Dist(r.value() / Rational(3)); }

Dist midpoint(const Dist& r, const Dist& s) {
  return Dist((r.value() + s.value()) / Rational(2));
}

std::vector<Dist> grid(std::int64_t denominator) {
  if (denominator < 1) throw ArgumentError("grid denominator must be >= 1");
  std::vector<Dist> out;
  out.reserve(static_cast<std::size_t>(denominator) + 1);
  for (std::int64_t k = 0; k <= denominator; ++k) {
    out.emplace_back(k, denominator);
  }
  return out;
}

}  // namespace urysohn
