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

#include "hgbern/contfrac.hpp"

#include "hgbern/combinatorics.hpp"
#include "hgbern/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hgbern {

Integer shifted_product(Integer const &N, long lo, long hi)
{
  Integer out = 1;
  for (long l = lo; l <= hi; ++l)
  {
    out *= N + l;
  }
  return out;
}

namespace {

void require_N(unsigned N)
{
  if (N < 1)
  {
    throw std::invalid_argument("N must be >= 1");
  }
}

Rational sign(long exponent)
{
  return exponent % 2 == 0 ? Rational(1) : Rational(-1);
}

// Coefficient of x^j in Q_{2m - odd} (odd = 1 for Q_{2m-1}, 0 for Q_{2m}):
//   sum_k (-1)^{j-k} (2m-j-odd)_k C(m-k-1, j-k) prod_{l=k+1}^{2m-j-odd} (N+l)
Integer q_coefficient(Integer const &N, long m, long j, long odd)
{
  Integer total;
  long const top = 2 * m - j - odd;
  for (long k = 0; k <= j; ++k)
  {
    Integer term = falling(Integer(top), static_cast<unsigned>(k));
    term *= binom(Integer(m - k - 1), static_cast<unsigned>(j - k));
    if (term == 0)
    {
      continue;
    }
    term *= shifted_product(N, k + 1, top);
    total += (j - k) % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

// Coefficient of x^j in P_{2m - odd}: (-1)^j C(m, j) prod_{l=1}^{2m-j-odd} (N+l)
Integer p_coefficient(Integer const &N, long m, long j, long odd)
{
  Integer term = binom(Integer(m), static_cast<unsigned>(j)) * shifted_product(N, 1, 2 * m - j - odd);
  return j % 2 == 0 ? term : Integer(-term);
}

std::vector<Rational> scaled_bernoulli(unsigned N, unsigned max_k, MemoStore &store)
{
  auto const row = hb_row(Integer(N), 1, max_k, store);
  std::vector<Rational> out;
  out.reserve(row.size());
  for (unsigned k = 0; k <= max_k; ++k)
  {
    out.push_back(row[k] / Rational(factorial(k)));
  }
  return out;
}

void require_identity_range(unsigned n, unsigned h, unsigned max_h, char const *what)
{
  if (n < 1)
  {
    throw PreconditionError(std::string(what) + " needs n >= 1");
  }
  if (h > max_h)
  {
    throw PreconditionError(std::string(what) + " holds for h <= " + std::to_string(max_h) + ", got h = " +
                            std::to_string(h));
  }
}

}  // namespace

Poly partial_denominator(unsigned N, unsigned n)
{
  return Poly::constant(Rational(N + n));
}

Poly partial_numerator(unsigned N, unsigned n)
{
  if (n < 2)
  {
    throw std::invalid_argument("partial numerators are used from n = 2 on");
  }
  unsigned const k = n / 2;
  if (n % 2 == 0)
  {
    return Poly::monomial(Rational(k), 1);
  }
  return Poly::monomial(-Rational(N + k), 1);
}

std::vector<ConvergentPair> convergents_rec(unsigned N, unsigned max_n)
{
  require_N(N);
  std::vector<ConvergentPair> out;
  out.push_back({N, 0, Poly{1}, Poly{1}});
  if (max_n >= 1)
  {
    out.push_back({N, 1, Poly{Rational(N + 1), Rational(-1)}, Poly{Rational(N + 1)}});
  }
  for (unsigned n = 2; n <= max_n; ++n)
  {
    Poly const a = partial_denominator(N, n);
    Poly const b = partial_numerator(N, n);
    Poly P = a * out[n - 1].P + b * out[n - 2].P;
    Poly Q = a * out[n - 1].Q + b * out[n - 2].Q;
    out.push_back({N, n, std::move(P), std::move(Q)});
  }
  return out;
}

ConvergentPair convergent_rec(unsigned N, unsigned n)
{
  return convergents_rec(N, n).back();
}

ConvergentPair convergent_closed(unsigned N, unsigned n)
{
  require_N(N);
  if (n == 0)
  {
    return {N, 0, Poly{1}, Poly{1}};
  }
  Integer const bigN(N);
  long const m   = (static_cast<long>(n) + 1) / 2;  // n = 2m - odd
  long const odd = static_cast<long>(n % 2);

  std::vector<Rational> p(m + 1);
  for (long j = 0; j <= m; ++j)
  {
    p[j] = Rational(p_coefficient(bigN, m, j, odd));
  }

  long const q_degree = odd ? m - 1 : m;
  std::vector<Rational> q(q_degree + 1);
  for (long j = 0; j <= q_degree; ++j)
  {
    q[j] = Rational(q_coefficient(bigN, m, j, odd));
  }
  return {N, n, Poly(std::move(p)), Poly(std::move(q))};
}

Series approximation_defect(unsigned N, unsigned n, ConvergentPair const &pair, MemoStore &store)
{
  std::size_t const order = n + 1;
  Series const gf         = hb_series(Integer(N), 1, order, store);
  return pair.Q.to_series(order) * gf - pair.P.to_series(order);
}

IdentitySides identity_even(unsigned N, unsigned n, unsigned h, MemoStore &store)
{
  require_N(N);
  require_identity_range(n, h, 2 * n, "even convergent identity");
  auto const scaled = scaled_bernoulli(N, h, store);
  Integer const bigN(N);

  IdentitySides out;
  for (unsigned j = 0; j <= std::min(h, n); ++j)
  {
    out.lhs += Rational(q_coefficient(bigN, n, j, 0)) * scaled[h - j];
  }
  if (h <= n)
  {
    out.rhs = sign(h) * Rational(binom(Integer(n), h) * shifted_product(bigN, 1, 2L * n - h));
  }
  return out;
}

IdentitySides identity_odd(unsigned N, unsigned n, unsigned h, MemoStore &store)
{
  require_N(N);
  require_identity_range(n, h, 2 * n - 1, "odd convergent identity");
  auto const scaled = scaled_bernoulli(N, h, store);
  Integer const bigN(N);

  IdentitySides out;
  for (unsigned j = 0; j <= std::min(h, n); ++j)
  {
    out.lhs += Rational(q_coefficient(bigN, n, j, 1)) * scaled[h - j];
  }
  if (h <= n)
  {
    out.rhs = sign(h) * Rational(binom(Integer(n), h) * shifted_product(bigN, 1, 2L * n - h - 1));
  }
  return out;
}

std::string_view variant_name(ClassicalVariant variant)
{
  switch (variant)
  {
  case ClassicalVariant::even:
    return "even";
  case ClassicalVariant::odd:
    return "odd";
  case ClassicalVariant::even_reduced:
    return "even-reduced";
  case ClassicalVariant::odd_reduced:
    return "odd-reduced";
  }
  return "?";
}

unsigned classical_max_h(ClassicalVariant variant, unsigned n)
{
  switch (variant)
  {
  case ClassicalVariant::even:
    return 2 * n;
  case ClassicalVariant::odd:
    return 2 * n - 1;
  case ClassicalVariant::even_reduced:
    return 2 * n + 1;
  case ClassicalVariant::odd_reduced:
    return 2 * n;
  }
  return 0;
}

namespace {

// Double-sum form with the products (2n-j+1-odd)!/(k+1)! in place of
// prod_{l=k+1}^{2n-j-odd}(1+l), divided by (2n-h+1-odd)!.
Rational classical_double_sum(unsigned n, unsigned h, long odd, std::vector<Rational> const &scaled)
{
  Rational total;
  long const ln = n;
  for (long j = 0; j <= std::min<long>(h, n); ++j)
  {
    long const top = 2 * ln - j - odd;
    for (long k = 0; k <= j; ++k)
    {
      Integer coeff = falling(Integer(top), static_cast<unsigned>(k)) *
                      binom(Integer(ln - k - 1), static_cast<unsigned>(j - k));
      if (coeff == 0)
      {
        continue;
      }
      Rational term(coeff * factorial(static_cast<unsigned>(top + 1)),
                    factorial(static_cast<unsigned>(k + 1)) * factorial(static_cast<unsigned>(2 * ln - h + 1 - odd)));
      term *= scaled[h - j];
      total += (j - k) % 2 == 0 ? term : -term;
    }
  }
  return total;
}

Rational even_reduced_lhs(unsigned n, unsigned h, std::vector<Rational> const &scaled)
{
  Rational total;
  long const ln = n;
  for (long j = 0; j <= static_cast<long>(h / 2); ++j)
  {
    Rational term(factorial(static_cast<unsigned>(2 * ln - 2 * j + 1)), Integer(2 * j + 1));
    term *= Rational(binom(Integer(ln), static_cast<unsigned>(2 * j)));
    total += term * scaled[h - 2 * j];
  }
  if (h >= 1)
  {
    total += Rational(factorial(2 * n), Integer(2)) * scaled[h - 1];
  }
  for (long j = 1; j <= (static_cast<long>(h) - 1) / 2; ++j)
  {
    Rational term(factorial(static_cast<unsigned>(2 * ln - 2 * j)), Integer(4 * (2 * j + 1)));
    term /= Rational(binom(Integer(2 * j - 1), static_cast<unsigned>(j)));
    term *= Rational(binom(Integer(ln - j - 1), static_cast<unsigned>(j)) * binom(Integer(ln), static_cast<unsigned>(j)));
    total += term * scaled[h - 2 * j - 1];
  }
  return total;
}

Rational odd_reduced_lhs(unsigned n, unsigned h, std::vector<Rational> const &scaled)
{
  Rational total;
  long const ln = n;
  for (long j = 0; j <= static_cast<long>(h / 2); ++j)
  {
    Integer const jf = factorial(static_cast<unsigned>(j));
    Rational term(jf * jf * factorial(static_cast<unsigned>(2 * ln - 2 * j)),
                  factorial(static_cast<unsigned>(2 * j + 1)));
    term *= Rational(binom(Integer(ln), static_cast<unsigned>(j)) * binom(Integer(ln - j - 1), static_cast<unsigned>(j)));
    total += term * scaled[h - 2 * j];
  }
  return total;
}

}  // namespace

IdentitySides classical_identity(ClassicalVariant variant, unsigned n, unsigned h, MemoStore &store)
{
  std::string const what = "classical identity (" + std::string(variant_name(variant)) + ")";
  if (n < 1)
  {
    throw PreconditionError(what + " needs n >= 1");
  }
  require_identity_range(n, h, classical_max_h(variant, n), what.c_str());
  auto const scaled = scaled_bernoulli(1, h, store);
  Rational const rhs_binom = h <= n ? sign(h) * Rational(binom(Integer(n), h)) : Rational();

  IdentitySides out;
  switch (variant)
  {
  case ClassicalVariant::even:
    out.lhs = classical_double_sum(n, h, 0, scaled);
    out.rhs = rhs_binom;
    break;
  case ClassicalVariant::odd:
    out.lhs = classical_double_sum(n, h, 1, scaled);
    out.rhs = rhs_binom;
    break;
  case ClassicalVariant::even_reduced:
    out.lhs = even_reduced_lhs(n, h, scaled);
    out.rhs = h <= n ? rhs_binom * Rational(factorial(2 * n - h + 1)) : Rational();
    break;
  case ClassicalVariant::odd_reduced:
    out.lhs = odd_reduced_lhs(n, h, scaled);
    out.rhs = h <= n ? rhs_binom * Rational(factorial(2 * n - h)) : Rational();
    break;
  }
  return out;
}

}  // namespace hgbern
