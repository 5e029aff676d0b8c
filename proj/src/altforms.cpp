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

#include "hgbern/altforms.hpp"

#include "hgbern/combinatorics.hpp"
#include "hgbern/errors.hpp"
#include "hgbern/hessenberg.hpp"

#include <stdexcept>
#include <string>

namespace hgbern {
namespace {

void require_index(unsigned N, unsigned r, unsigned n, char const *route)
{
  if (N < 1 || r < 1)
  {
    throw std::invalid_argument("N and r must be >= 1");
  }
  if (n < 1)
  {
    throw PreconditionError(std::string(route) + " needs n >= 1");
  }
}

void require_descent(unsigned N, char const *route)
{
  if (N < 2)
  {
    throw PreconditionError(std::string(route) + " needs N >= 2");
  }
}

// N!/(N+i)! for i = 0..max
std::vector<Rational> factorial_ratios(unsigned N, unsigned max_i)
{
  std::vector<Rational> out;
  out.reserve(max_i + 1);
  for (unsigned i = 0; i <= max_i; ++i)
  {
    out.emplace_back(Integer(1), rising(Integer(N + 1), i));
  }
  return out;
}

}  // namespace

Rational mr(unsigned N, unsigned r, unsigned e)
{
  return composition_weight(Integer(N), r, e);
}

MrTable mr_table(unsigned N, unsigned r, unsigned max_e)
{
  MrTable table{N, r, {}};
  table.values.reserve(max_e + 1);
  for (unsigned e = 0; e <= max_e; ++e)
  {
    table.values.push_back(mr(N, r, e));
  }
  return table;
}

Rational hb_explicit_comp(unsigned N, unsigned n)
{
  require_index(N, 1, n, "explicit composition sum");
  auto const ratio = factorial_ratios(N, n);
  Rational total;
  for (unsigned k = 1; k <= n; ++k)
  {
    Rational inner;
    enumerate_compositions({n, k, 1}, [&](std::span<unsigned const> parts) {
      Rational term = 1;
      for (unsigned i : parts)
      {
        term *= ratio[i];
      }
      inner += term;
    });
    // (-N!)^k / prod (N+i_j)! = (-1)^k prod N!/(N+i_j)!
    total += k % 2 == 0 ? inner : -inner;
  }
  return Rational(factorial(n)) * total;
}

Rational hb_explicit_binom(unsigned N, unsigned n)
{
  require_index(N, 1, n, "binomial-weighted composition sum");
  auto const ratio = factorial_ratios(N, n);

  // The k-part weak-composition sums for all k grow like C(2n, n) terms, so
  // they are accumulated by the first part: S_k(t) = sum_i ratio[i] S_{k-1}(t-i).
  // S_k(n) is exactly the sum of prod ratio[i_j] over i_1+..+i_k = n.
  std::vector<Rational> partial(n + 1);
  partial[0] = 1;  // S_0
  Rational total;
  for (unsigned k = 1; k <= n; ++k)
  {
    std::vector<Rational> next(n + 1);
    for (unsigned t = 0; t <= n; ++t)
    {
      for (unsigned i = 0; i <= t; ++i)
      {
        if (!partial[t - i].is_zero())
        {
          next[t] += ratio[i] * partial[t - i];
        }
      }
    }
    partial = std::move(next);
    Rational const term = Rational(binom(Integer(n + 1), k + 1)) * partial[n];
    total += k % 2 == 0 ? term : -term;
  }
  return Rational(factorial(n)) * total;
}

Rational reciprocal_binom_inverse(unsigned N, unsigned n, MemoStore &store)
{
  require_index(N, 1, n, "reciprocal binomial inversion");
  auto const row = hb_row(Integer(N), 1, n, store);
  Rational total;
  for (unsigned k = 1; k <= n; ++k)
  {
    Rational inner;
    enumerate_compositions({n, k, 1}, [&](std::span<unsigned const> parts) {
      Rational term(multinomial(parts));
      for (unsigned i : parts)
      {
        term *= row[i];
      }
      inner += term;
    });
    total += k % 2 == 0 ? inner : -inner;
  }
  return total;
}

Rational hb_higher_explicit(unsigned N, unsigned r, unsigned n)
{
  require_index(N, r, n, "explicit higher-order composition sum");
  MrTable const table = mr_table(N, r, n);
  Rational total;
  for (unsigned k = 1; k <= n; ++k)
  {
    Rational inner;
    enumerate_compositions({n, k, 1}, [&](std::span<unsigned const> parts) {
      Rational term = 1;
      for (unsigned e : parts)
      {
        term *= table(e);
      }
      inner += term;
    });
    total += k % 2 == 0 ? inner : -inner;
  }
  return Rational(factorial(n)) * total;
}

Rational hb_higher_convolution(unsigned N, unsigned r, unsigned n, MemoStore &store)
{
  if (N < 1 || r < 1)
  {
    throw std::invalid_argument("N and r must be >= 1");
  }
  auto const row = hb_row(Integer(N), 1, n, store);
  Rational total;
  enumerate_compositions({n, r, 0}, [&](std::span<unsigned const> parts) {
    Rational term(multinomial(parts));
    for (unsigned i : parts)
    {
      term *= row[i];
    }
    total += term;
  });
  return total;
}

Rational hb_descent_step(unsigned N, unsigned n, MemoStore &store)
{
  require_index(N, 1, n, "one-step descent");
  require_descent(N, "one-step descent");
  auto const lower = hb_row(Integer(N - 1), 1, n, store);

  std::vector<Rational> row{Rational(1)};
  for (unsigned k = 1; k <= n; ++k)
  {
    Rational acc = lower[k];
    for (unsigned m = 1; m + 1 <= k; ++m)
    {
      acc += Rational(binom(Integer(k), k - m + 1)) * row[m] * lower[k - m + 1];
    }
    row.push_back(Rational(Integer(N), Integer(N + k)) * acc);
  }
  return row[n];
}

namespace {

// Sum over chains i_{depth} > i_{depth+1} > ... >= 1 continuing from `top`,
// with the running product already folded into `weight`.
void descend_chains(unsigned N, unsigned top, Rational const &weight, std::vector<Rational> const &lower,
                    Rational &total)
{
  // chain stops at i_m = top
  total += weight * lower[top];
  for (unsigned next = top - 1; next >= 1; --next)
  {
    Rational step = lower[top - next + 1];
    step *= Rational(binom(Integer(top), top - next + 1));
    step *= Rational(Integer(N), Integer(N + next));
    descend_chains(N, next, weight * step, lower, total);
  }
}

}  // namespace

Rational hb_descent_nested(unsigned N, unsigned n, MemoStore &store)
{
  require_index(N, 1, n, "nested descent");
  require_descent(N, "nested descent");
  auto const lower = hb_row(Integer(N - 1), 1, n, store);
  Rational total;
  descend_chains(N, n, Rational(1), lower, total);
  return Rational(Integer(N), Integer(N + n)) * total;
}

Rational hb_trudi(unsigned N, unsigned r, unsigned n)
{
  require_index(N, r, n, "Trudi expansion");
  MrTable const table = mr_table(N, r, n);
  Rational total;
  enumerate_partition_vectors(n, [&](PartitionVector const &t) {
    Rational term(multinomial(t.multiplicity));
    for (unsigned i = 0; i < n; ++i)
    {
      if (t.multiplicity[i] != 0)
      {
        term *= table(i + 1).pow(t.multiplicity[i]);
      }
    }
    total += t.length() % 2 == 0 ? term : -term;
  });
  return Rational(factorial(n)) * total;
}

Rational recover_mr_det(unsigned N, unsigned r, unsigned n, MemoStore &store)
{
  require_index(N, r, n, "M_r recovery");
  auto const row = hb_row(Integer(N), r, n, store);
  ToeplitzHessenbergSpec spec;
  for (unsigned k = 1; k <= n; ++k)
  {
    Rational entry = row[k] / Rational(factorial(k));
    spec.entries.push_back(k % 2 == 0 ? entry : -entry);
  }
  return toeplitz_hessenberg_det(spec);
}

}  // namespace hgbern
