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

#include "hgbern/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hgbern {
namespace {

bool all_digits(std::string_view s)
{
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Integer parse_integer(std::string_view text)
{
  std::string_view digits = text;
  bool negative           = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
  {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits))
  {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  Integer value(std::string(digits), 10);
  return negative ? Integer(-value) : value;
}

Rational::Rational(Integer const &value)
  : value_(value)
{}

Rational::Rational(Integer numerator, Integer denominator)
{
  if (denominator == 0)
  {
    throw std::invalid_argument("rational with zero denominator");
  }
  value_.get_num() = std::move(numerator);
  value_.get_den() = std::move(denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value)
  : value_(std::move(value))
{}

Rational Rational::parse(std::string_view text)
{
  auto const slash = text.find('/');
  if (slash == std::string_view::npos)
  {
    return Rational(parse_integer(text));
  }
  auto const den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
  {
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

std::string Rational::str() const
{
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const
{
  if (is_zero())
  {
    throw std::domain_error("inverse of zero");
  }
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const
{
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(std::move(out));
}

Rational Rational::abs() const
{
  return Rational(mpq_class(::abs(value_)));
}

Rational &Rational::operator+=(Rational const &rhs)
{
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(Rational const &rhs)
{
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(Rational const &rhs)
{
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(Rational const &rhs)
{
  if (rhs.is_zero())
  {
    throw std::domain_error("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const
{
  return Rational(mpq_class(-value_));
}

std::ostream &operator<<(std::ostream &os, Rational const &value)
{
  return os << value.str();
}

std::string to_decimal(Rational const &value, unsigned digits)
{
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

  // round(|num| * 10^digits / den), half away from zero
  Integer const num = abs(value.numerator()) * scale;
  Integer const den = value.denominator();
  Integer q         = num / den;
  Integer const rem = num - q * den;
  if (2 * rem >= den)
  {
    ++q;
  }

  std::string body = q.get_str();
  if (digits > 0)
  {
    if (body.size() <= digits)
    {
      body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, ".");
  }
  bool const negative = value.sign() < 0 && q != 0;
  return negative ? "-" + body : body;
}

}  // namespace hgbern
