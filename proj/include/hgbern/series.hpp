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

#include <cstddef>
#include <string>
#include <vector>

namespace hgbern {

/// Truncated power series c_0 + c_1 x + ... + c_{order-1} x^{order-1} + O(x^order).
/// Binary operations truncate to the smaller order.
class Series
{
public:
  explicit Series(std::size_t order);
  explicit Series(std::vector<Rational> coefficients);

  std::size_t order() const
  {
    return coeffs_.size();
  }
  Rational const &operator[](std::size_t i) const
  {
    return coeffs_[i];
  }
  Rational &operator[](std::size_t i)
  {
    return coeffs_[i];
  }
  std::vector<Rational> const &coefficients() const
  {
    return coeffs_;
  }

  bool is_zero() const;
  Series truncated(std::size_t order) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  Series reciprocal() const;
  Series pow(unsigned exponent) const;

  Series &operator+=(Series const &rhs);
  Series &operator-=(Series const &rhs);
  Series &operator*=(Rational const &scalar);

  friend Series operator+(Series lhs, Series const &rhs)
  {
    return lhs += rhs;
  }
  friend Series operator-(Series lhs, Series const &rhs)
  {
    return lhs -= rhs;
  }
  friend Series operator*(Series const &lhs, Series const &rhs);

  friend bool operator==(Series const &, Series const &) = default;

  /// "[c0, c1, ...] + O(x^order)"
  std::string str() const;

private:
  std::vector<Rational> coeffs_;
};

}  // namespace hgbern
