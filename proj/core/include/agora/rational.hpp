// Copyright 2026 The Authors.
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

#ifndef AGORA_RATIONAL_HPP_
#define AGORA_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace agora {

/// Money in integer minor currency units (e.g. centimes).
using Money = std::int64_t;

/// Exact arbitrary-precision rational number, always kept in lowest terms.
///
/// All MES prices, payments and leftover budgets are carried as Rational;
/// conversion to Money happens only at output boundaries.
class Rational {
 public:
  Rational() = default;
  Rational(Money value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(Money numerator, Money denominator);

  /// Parses "n" or "n/d" (optional leading '-'); throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string to_string() const;

  std::string numerator_string() const;
  std::string denominator_string() const;

  bool is_integer() const;
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// Rounds to the nearest integer, ties to even.
  Money round_half_even() const;
  /// Largest integer not greater than the value.
  Money floor() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace agora

#endif  // AGORA_RATIONAL_HPP_
