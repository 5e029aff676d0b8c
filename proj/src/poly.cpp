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

#include "hgbern/poly.hpp"

#include <algorithm>
#include <utility>

namespace hgbern {

Poly::Poly(std::vector<Rational> coefficients)
  : coeffs_(std::move(coefficients))
{
  normalize();
}

Poly::Poly(std::initializer_list<Rational> coefficients)
  : coeffs_(coefficients)
{
  normalize();
}

Poly Poly::constant(Rational c)
{
  return Poly(std::vector<Rational>{std::move(c)});
}

Poly Poly::monomial(Rational c, unsigned k)
{
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return Poly(std::move(coeffs));
}

void Poly::normalize()
{
  while (!coeffs_.empty() && coeffs_.back().is_zero())
  {
    coeffs_.pop_back();
  }
}

Rational Poly::coeff(std::size_t k) const
{
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational Poly::evaluate(Rational const &x) const
{
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
  {
    acc = acc * x + *it;
  }
  return acc;
}

Series Poly::to_series(std::size_t order) const
{
  Series out(order);
  for (std::size_t k = 0; k < std::min(order, coeffs_.size()); ++k)
  {
    out[k] = coeffs_[k];
  }
  return out;
}

Poly &Poly::operator+=(Poly const &rhs)
{
  if (coeffs_.size() < rhs.coeffs_.size())
  {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
  {
    coeffs_[i] += rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

Poly &Poly::operator-=(Poly const &rhs)
{
  if (coeffs_.size() < rhs.coeffs_.size())
  {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
  {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

Poly &Poly::operator*=(Rational const &scalar)
{
  for (auto &c : coeffs_)
  {
    c *= scalar;
  }
  normalize();
  return *this;
}

Poly operator*(Poly const &lhs, Poly const &rhs)
{
  if (lhs.is_zero() || rhs.is_zero())
  {
    return {};
  }
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
  {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
    {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

std::string Poly::str() const
{
  if (coeffs_.empty())
  {
    return "0";
  }
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
  {
    Rational const &c = coeffs_[k];
    if (c.is_zero())
    {
      continue;
    }
    bool const negative = c.sign() < 0;
    if (out.empty())
    {
      out += negative ? "-" : "";
    }
    else
    {
      out += negative ? " - " : " + ";
    }

    Rational const magnitude = c.abs();
    std::string const mag = magnitude.is_integer() ? magnitude.numerator().get_str() : magnitude.str();
    if (k == 0)
    {
      out += mag;
      continue;
    }
    if (magnitude != Rational(1))
    {
      out += mag + "*";
    }
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

}  // namespace hgbern
