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

#include "urysohn/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "urysohn/error.hpp"

namespace urysohn {

namespace {

using Wide = __int128;
using UWide = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
// Operands below this bound keep three-factor products inside 125 bits.
constexpr std::int64_t kTripleBound = std::int64_t{1} << 41;

UWide gcd_wide(UWide a, UWide b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a),
                      static_cast<std::uint64_t>(b));
    }
    UWide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

UWide abs_wide(Wide v) { return v < 0 ? UWide(0) - UWide(v) : UWide(v); }

BigInt to_big_int(Wide v) {
  UWide mag = abs_wide(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return v < 0 ? BigInt(-out) : out;
}

bool fits(const BigInt& v) { return v <= kMax && v >= -kMax; }

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    *this = from_wide(value, 1);
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const Big& value) { *this = from_big(value); }

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  UWide g = gcd_wide(abs_wide(num), UWide(den));
  if (g > 1) {
    num /= Wide(g);
    den /= Wide(g);
  }
  Rational r;
  if (num <= kMax && num >= -kMax && den <= kMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const Big>(to_big_int(num), to_big_int(den));
  return r;
}

Rational Rational::from_big(Big value) {
  const BigInt& n = boost::multiprecision::numerator(value);
  const BigInt& d = boost::multiprecision::denominator(value);
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.big_ = std::make_shared<const Big>(std::move(value));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!is_digits(num_text) || !is_digits(den_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return from_big(Big(num, den));
}

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  return Big(BigInt(num_), BigInt(den_));
}

int Rational::sign() const noexcept {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::to_string() const {
  if (big_) {
    const BigInt& d = boost::multiprecision::denominator(*big_);
    std::string out = boost::multiprecision::numerator(*big_).str();
    if (d != 1) out += "/" + d.str();
    return out;
  }
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() + b.to_big());
  if (a.den_ == b.den_) return Rational::from_wide(Wide(a.num_) + b.num_, a.den_);
  return Rational::from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                             Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() * b.to_big());
  return Rational::from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw ArgumentError("rational division by zero");
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() / b.to_big());
  return Rational::from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    // Canonical form: a big value never equals an inline one.
    return a.big_ && b.big_ && *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = a.to_big().compare(b.to_big());
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

int Rational::compare_sum(const Rational& a, const Rational& b,
                          const Rational& c) {
  auto small = [](const Rational& r) {
    return !r.big_ && r.den_ < kTripleBound && r.num_ < kTripleBound &&
           r.num_ > -kTripleBound;
  };
  if (small(a) && small(b) && small(c)) {
    Wide lhs = Wide(b.num_) * c.den_ * a.den_ + Wide(c.num_) * b.den_ * a.den_;
    Wide rhs = Wide(a.num_) * b.den_ * c.den_;
    return (lhs > rhs) - (lhs < rhs);
  }
  return (b + c - a).sign();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace urysohn
