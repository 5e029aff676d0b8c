//------------------------------------------------------------------------------
//
//   Copyright 2026 The hgbern Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hgbern {

using Integer = mpz_class;

/// Parses a decimal integer with optional leading sign. Throws
/// std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);

/**
 * Exact rational number, always held in lowest terms with a positive
 * denominator. Zero is 0/1.
 *
 * Thin value wrapper over GMP's mpq_t; every constructor and arithmetic
 * operator leaves the value canonical, so equality is structural.
 */
class Rational
{
public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
    : value_(static_cast<long>(value))
  {}

  template <std::unsigned_integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
    : value_(static_cast<unsigned long>(value))
  {}

  Rational(Integer const &value);  // NOLINT(google-explicit-constructor)
  /// Unevaluated integer expressions such as a * b.
  template <typename U>
  Rational(__gmp_expr<mpz_t, U> const &expr)  // NOLINT(google-explicit-constructor)
    : Rational(Integer(expr))
  {}

  /// Throws std::invalid_argument when the denominator is zero.
  Rational(Integer numerator, Integer denominator);

  /// Accepts "a", "a/b", "-a/b", "+a/b". The denominator must be a nonzero
  /// unsigned integer; the result is reduced.
  static Rational parse(std::string_view text);

  Integer numerator() const
  {
    return value_.get_num();
  }
  Integer denominator() const
  {
    return value_.get_den();
  }

  bool is_zero() const
  {
    return sgn(value_) == 0;
  }
  bool is_integer() const
  {
    return value_.get_den() == 1;
  }
  int sign() const
  {
    return sgn(value_);
  }

  /// Serialized form "num/den"; integers keep the explicit "/1".
  std::string str() const;

  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  Rational abs() const;

  mpq_class const &raw() const
  {
    return value_;
  }

  Rational &operator+=(Rational const &rhs);
  Rational &operator-=(Rational const &rhs);
  Rational &operator*=(Rational const &rhs);
  Rational &operator/=(Rational const &rhs);

  friend Rational operator+(Rational lhs, Rational const &rhs)
  {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, Rational const &rhs)
  {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, Rational const &rhs)
  {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, Rational const &rhs)
  {
    return lhs /= rhs;
  }
  Rational operator-() const;

  friend bool operator==(Rational const &lhs, Rational const &rhs)
  {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(Rational const &lhs, Rational const &rhs)
  {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, Rational const &value);

/// Decimal rendering rounded half away from zero to `digits` fractional
/// digits. Display only.
std::string to_decimal(Rational const &value, unsigned digits);

}  // namespace hgbern
