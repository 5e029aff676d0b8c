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

#include "hgbern/rational.hpp"
#include "hgbern/series.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hgbern {

/// Dense polynomial in x over the rationals. Trailing zeros are stripped, so
/// the zero polynomial has no coefficients and degree -1.
class Poly
{
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly constant(Rational c);
  /// c * x^k
  static Poly monomial(Rational c, unsigned k);

  long degree() const
  {
    return static_cast<long>(coeffs_.size()) - 1;
  }
  bool is_zero() const
  {
    return coeffs_.empty();
  }
  /// Coefficient of x^k (zero past the degree).
  Rational coeff(std::size_t k) const;
  std::vector<Rational> const &coefficients() const
  {
    return coeffs_;
  }

  Rational evaluate(Rational const &x) const;
  Series to_series(std::size_t order) const;

  Poly &operator+=(Poly const &rhs);
  Poly &operator-=(Poly const &rhs);
  Poly &operator*=(Rational const &scalar);

  friend Poly operator+(Poly lhs, Poly const &rhs)
  {
    return lhs += rhs;
  }
  friend Poly operator-(Poly lhs, Poly const &rhs)
  {
    return lhs -= rhs;
  }
  friend Poly operator*(Poly const &lhs, Poly const &rhs);

  friend bool operator==(Poly const &, Poly const &) = default;

  /// Ascending powers with explicit signs: "6 - 2*x + 1/2*x^2"; zero is "0".
  std::string str() const;

private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace hgbern
