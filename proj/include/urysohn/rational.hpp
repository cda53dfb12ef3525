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

#ifndef URYSOHN_RATIONAL_HPP
#define URYSOHN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace urysohn {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in 64 bits are stored
/// inline and combined with 128-bit intermediates; anything larger is
/// promoted to an arbitrary-precision boost::multiprecision::cpp_rational and
/// demoted again as soon as it fits. The representation is canonical, so
/// equality is value equality.
class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const Big& value);

  /// Parses "p", "-p" or "p/q" with decimal integers of any length.
  static Rational parse(std::string_view text);

  bool is_inline() const noexcept { return big_ == nullptr; }
  Big to_big() const;
  int sign() const noexcept;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  /// sign(b + c - a) without materializing the sum; the hot comparison of
  /// triangle checks.
  static int compare_sum(const Rational& a, const Rational& b,
                         const Rational& c);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_big(Big value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace urysohn

#endif  // URYSOHN_RATIONAL_HPP
