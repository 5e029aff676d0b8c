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

#include "hgbern/hessenberg.hpp"

#include "hgbern/altforms.hpp"
#include "hgbern/combinatorics.hpp"
#include "hgbern/errors.hpp"

#include <stdexcept>

namespace hgbern {

DenseMatrix materialize(ToeplitzHessenbergSpec const &spec)
{
  std::size_t const m = spec.dimension();
  DenseMatrix out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
  {
    for (std::size_t j = 0; j <= i; ++j)
    {
      out[i][j] = spec.entries[i - j];
    }
    if (i + 1 < m)
    {
      out[i][i + 1] = spec.a0;
    }
  }
  return out;
}

std::vector<Rational> toeplitz_hessenberg_minors(ToeplitzHessenbergSpec const &spec)
{
  std::size_t const m = spec.dimension();
  Rational const neg_a0 = -spec.a0;
  std::vector<Rational> minors;
  minors.reserve(m + 1);
  minors.emplace_back(1);
  for (std::size_t k = 1; k <= m; ++k)
  {
    Rational acc;
    Rational sign_power = 1;  // (-a0)^{l-1}
    for (std::size_t l = 1; l <= k; ++l)
    {
      acc += sign_power * spec.entries[l - 1] * minors[k - l];
      sign_power *= neg_a0;
    }
    minors.push_back(std::move(acc));
  }
  return minors;
}

Rational toeplitz_hessenberg_det(ToeplitzHessenbergSpec const &spec)
{
  return toeplitz_hessenberg_minors(spec).back();
}

Rational trudi_expand(ToeplitzHessenbergSpec const &spec)
{
  unsigned const m = static_cast<unsigned>(spec.dimension());
  if (m == 0)
  {
    throw PreconditionError("Trudi expansion needs m >= 1");
  }
  Rational const neg_a0 = -spec.a0;
  Rational total;
  enumerate_partition_vectors(m, [&](PartitionVector const &t) {
    Rational term(multinomial(t.multiplicity));
    term *= neg_a0.pow(m - t.length());
    for (unsigned i = 0; i < m; ++i)
    {
      if (t.multiplicity[i] != 0)
      {
        term *= spec.entries[i].pow(t.multiplicity[i]);
      }
    }
    total += term;
  });
  return total;
}

Rational hb_higher_det(unsigned N, unsigned r, unsigned n)
{
  if (N < 1 || r < 1)
  {
    throw std::invalid_argument("N and r must be >= 1");
  }
  if (n < 1)
  {
    throw PreconditionError("determinant expression needs n >= 1");
  }
  MrTable const table = mr_table(N, r, n);
  ToeplitzHessenbergSpec spec{Rational(1), {table.values.begin() + 1, table.values.end()}};
  Rational const det = toeplitz_hessenberg_det(spec);
  Rational const scale(factorial(n));
  return n % 2 == 0 ? scale * det : -(scale * det);
}

Rational hb_det(unsigned N, unsigned n)
{
  return hb_higher_det(N, 1, n);
}

DenseMatrix unit_lower_toeplitz(std::span<Rational const> column)
{
  std::size_t const size = column.size();
  DenseMatrix out(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i)
  {
    for (std::size_t j = 0; j <= i; ++j)
    {
      out[i][j] = column[i - j];
    }
  }
  return out;
}

DenseMatrix multiply(DenseMatrix const &a, DenseMatrix const &b)
{
  std::size_t const rows  = a.size();
  std::size_t const inner = b.size();
  std::size_t const cols  = inner ? b[0].size() : 0;
  DenseMatrix out(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
  {
    for (std::size_t k = 0; k < inner; ++k)
    {
      if (a[i][k].is_zero())
      {
        continue;
      }
      for (std::size_t j = 0; j < cols; ++j)
      {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

InversionVerdict inversion_pair_check(std::span<Rational const> alphas, std::span<Rational const> rs,
                                      std::size_t matrix_limit)
{
  if (alphas.size() != rs.size())
  {
    throw std::invalid_argument("inversion pair lists differ in length");
  }
  std::size_t const n = alphas.size();
  InversionVerdict verdict;
  auto fail = [&](bool &flag, std::size_t index, char const *what) {
    if (flag)
    {
      flag = false;
      if (!verdict.first_bad_index)
      {
        verdict.first_bad_index = index;
        verdict.failure         = what;
      }
    }
  };

  // relation, with alpha_0 = R(0) = 1
  auto alpha = [&](std::size_t k) { return k == 0 ? Rational(1) : alphas[k - 1]; };
  auto r_at  = [&](std::size_t k) { return k == 0 ? Rational(1) : rs[k - 1]; };
  for (std::size_t m = 1; m <= n; ++m)
  {
    Rational acc;
    for (std::size_t k = 0; k <= m; ++k)
    {
      Rational const term = alpha(k) * r_at(m - k);
      acc += (m - k) % 2 == 0 ? term : -term;
    }
    if (!acc.is_zero())
    {
      fail(verdict.relation, m, "relation sum (-1)^{n-k} alpha_k R(n-k) = 0");
      break;
    }
  }

  auto const alpha_dets = toeplitz_hessenberg_minors({Rational(1), {rs.begin(), rs.end()}});
  for (std::size_t k = 1; k <= n; ++k)
  {
    if (alpha_dets[k] != alphas[k - 1])
    {
      fail(verdict.alpha_from_r, k, "alpha from determinant of R");
      break;
    }
  }

  auto const r_dets = toeplitz_hessenberg_minors({Rational(1), {alphas.begin(), alphas.end()}});
  for (std::size_t k = 1; k <= n; ++k)
  {
    if (r_dets[k] != rs[k - 1])
    {
      fail(verdict.r_from_alpha, k, "R from determinant of alpha");
      break;
    }
  }

  if (n <= matrix_limit)
  {
    std::vector<Rational> a_col{Rational(1)};
    std::vector<Rational> b_col{Rational(1)};
    for (std::size_t k = 1; k <= n; ++k)
    {
      a_col.push_back(alphas[k - 1]);
      b_col.push_back(k % 2 == 0 ? rs[k - 1] : -rs[k - 1]);
    }
    DenseMatrix const product = multiply(unit_lower_toeplitz(a_col), unit_lower_toeplitz(b_col));
    for (std::size_t i = 0; i <= n && verdict.matrix_inverse; ++i)
    {
      for (std::size_t j = 0; j <= n; ++j)
      {
        if (product[i][j] != Rational(i == j ? 1 : 0))
        {
          fail(verdict.matrix_inverse, i, "matrix product is not the identity");
          break;
        }
      }
    }
  }
  return verdict;
}

}  // namespace hgbern
