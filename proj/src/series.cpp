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

#include "hgbern/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hgbern {

Series::Series(std::size_t order)
  : coeffs_(order)
{}

Series::Series(std::vector<Rational> coefficients)
  : coeffs_(std::move(coefficients))
{}

bool Series::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Rational const &c) { return c.is_zero(); });
}

Series Series::truncated(std::size_t order) const
{
  Series out(order);
  std::copy_n(coeffs_.begin(), std::min(order, coeffs_.size()), out.coeffs_.begin());
  return out;
}

Series Series::reciprocal() const
{
  if (coeffs_.empty() || coeffs_[0].is_zero())
  {
    throw std::domain_error("series reciprocal needs a nonzero constant term");
  }
  Series out(order());
  Rational const inv0 = coeffs_[0].inverse();
  out[0]              = inv0;
  for (std::size_t n = 1; n < order(); ++n)
  {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k)
    {
      acc += coeffs_[k] * out[n - k];
    }
    out[n] = -acc * inv0;
  }
  return out;
}

Series Series::pow(unsigned exponent) const
{
  Series out(order());
  if (order() > 0)
  {
    out[0] = 1;
  }
  for (unsigned i = 0; i < exponent; ++i)
  {
    out = out * *this;
  }
  return out;
}

Series &Series::operator+=(Series const &rhs)
{
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
  {
    coeffs_[i] += rhs[i];
  }
  return *this;
}

Series &Series::operator-=(Series const &rhs)
{
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
  {
    coeffs_[i] -= rhs[i];
  }
  return *this;
}

Series &Series::operator*=(Rational const &scalar)
{
  for (auto &c : coeffs_)
  {
    c *= scalar;
  }
  return *this;
}

Series operator*(Series const &lhs, Series const &rhs)
{
  std::size_t const order = std::min(lhs.order(), rhs.order());
  Series out(order);
  for (std::size_t i = 0; i < order; ++i)
  {
    if (lhs[i].is_zero())
    {
      continue;
    }
    for (std::size_t j = 0; i + j < order; ++j)
    {
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

std::string Series::str() const
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
  {
    os << (i ? ", " : "") << coeffs_[i];
  }
  os << "] + O(x^" << coeffs_.size() << ')';
  return os.str();
}

}  // namespace hgbern
