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

#include "hgbern/congruence.hpp"

#include "hgbern/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgbern {

std::string PadicVal::str() const
{
  return value_ ? std::to_string(*value_) : "inf";
}

PadicVal operator+(PadicVal const &a, PadicVal const &b)
{
  if (a.is_infinite() || b.is_infinite())
  {
    return PadicVal::infinity();
  }
  return PadicVal::finite(a.value() + b.value());
}

std::strong_ordering operator<=>(PadicVal const &a, PadicVal const &b)
{
  if (a.is_infinite() || b.is_infinite())
  {
    return a.is_infinite() <=> b.is_infinite();
  }
  return a.value() <=> b.value();
}

bool is_prime(Integer const &p)
{
  if (p < 2)
  {
    return false;
  }
  constexpr unsigned long trial_limit = 1'000'000;
  for (unsigned long d = 2; d <= trial_limit; ++d)
  {
    if (Integer(d) * d > p)
    {
      return true;
    }
    if (mpz_divisible_ui_p(p.get_mpz_t(), d))
    {
      return p == d;
    }
  }
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

namespace {

void require_prime(Integer const &p)
{
  if (!is_prime(p))
  {
    throw std::invalid_argument(p.get_str() + " is not prime");
  }
}

long strip(Integer value, Integer const &p)
{
  return static_cast<long>(mpz_remove(value.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t()));
}

Integer power(Integer const &p, unsigned long k)
{
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), k);
  return out;
}

// ord_p(prod_{k=0}^{m} (1+k)!) = sum_{j=1}^{m+1} ord_p(j!)
unsigned long ord_factorial_product(Integer const &p, unsigned m)
{
  unsigned long total = 0;
  long running        = 0;  // ord_p(j!)
  for (unsigned j = 1; j <= m + 1; ++j)
  {
    running += strip(Integer(j), p);
    total += static_cast<unsigned long>(running);
  }
  return total;
}

unsigned long ord_index(Integer const &p, unsigned n)
{
  return n == 0 ? 0 : static_cast<unsigned long>(strip(Integer(n), p));
}

// (1 - p^{k-1}) value / k
Rational kummer_side(Integer const &p, unsigned k, Rational const &value)
{
  return (Rational(1) - Rational(power(p, k - 1))) * value / Rational(k);
}

void check_kummer_indices(Integer const &p, unsigned m, unsigned n, unsigned nu, CongruenceVerdict &verdict)
{
  Integer const p_minus_1 = p - 1;
  for (auto [name, value] : {std::pair{"m", m}, std::pair{"n", n}})
  {
    if (value == 0 || value % 2 != 0)
    {
      verdict.violations.push_back(std::string("hypothesis ") + name + " positive even violated");
    }
    if (mpz_divisible_p(Integer(value).get_mpz_t(), p_minus_1.get_mpz_t()))
    {
      verdict.violations.push_back(std::string("hypothesis ") + name + " ≢ 0 (mod p−1) violated");
    }
  }
  Integer const period = p_minus_1 * power(p, nu);
  Integer const diff   = Integer(m) - Integer(n);
  if (!mpz_divisible_p(diff.get_mpz_t(), period.get_mpz_t()))
  {
    verdict.violations.push_back("hypothesis m ≡ n (mod (p−1)p^ν) violated");
  }
}

void check_threshold(Integer const &p, Integer const &N, unsigned long required, CongruenceVerdict &verdict)
{
  PadicVal const actual = ordp(Integer(N - 1), p);
  verdict.n_minus_one_ord = actual;
  verdict.required_ord    = required;
  if (actual < PadicVal::finite(static_cast<long>(required)))
  {
    verdict.violations.push_back("hypothesis ord_p(N−1) ≥ " + std::to_string(required) +
                                 " violated (ord_p(N−1) = " + actual.str() + ")");
  }
}

CongruenceVerdict exact_equality(Rational const &a, Rational const &b, Integer const &p)
{
  CongruenceVerdict verdict;
  verdict.p              = p;
  verdict.lhs            = a;
  verdict.rhs            = b;
  verdict.difference_ord = ordp(a - b, p);
  verdict.holds          = a == b;
  return verdict;
}

}  // namespace

PadicVal ordp(Integer const &x, Integer const &p)
{
  require_prime(p);
  if (x == 0)
  {
    return PadicVal::infinity();
  }
  return PadicVal::finite(strip(abs(x), p));
}

PadicVal ordp(Rational const &x, Integer const &p)
{
  require_prime(p);
  if (x.is_zero())
  {
    return PadicVal::infinity();
  }
  return PadicVal::finite(strip(abs(x.numerator()), p) - strip(x.denominator(), p));
}

std::optional<Integer> residue(Rational const &x, Integer const &p, unsigned k)
{
  Integer const modulus = power(p, k);
  Integer const den     = x.denominator();
  if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
  {
    return std::nullopt;
  }
  Integer inverse;
  mpz_invert(inverse.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer out = x.numerator() * inverse;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

CongruenceVerdict congruent(Rational const &a, Rational const &b, Integer const &p, unsigned long k)
{
  if (k < 1)
  {
    throw std::invalid_argument("congruence modulus exponent must be >= 1");
  }
  CongruenceVerdict verdict   = exact_equality(a, b, p);
  verdict.modulus_exponent    = k;
  verdict.holds               = verdict.difference_ord >= PadicVal::finite(static_cast<long>(k));
  verdict.lhs_residue         = residue(a, p, static_cast<unsigned>(k));
  verdict.rhs_residue         = residue(b, p, static_cast<unsigned>(k));
  return verdict;
}

CongruenceVerdict kummer_classical(Integer const &p, unsigned m, unsigned n, unsigned nu, MemoStore &store)
{
  require_prime(p);
  std::vector<std::string> violations;
  {
    CongruenceVerdict probe;
    check_kummer_indices(p, m, n, nu, probe);
    violations = std::move(probe.violations);
  }
  if (m == 0 || n == 0)
  {
    CongruenceVerdict verdict;
    verdict.p          = p;
    verdict.violations = std::move(violations);
    return verdict;
  }
  CongruenceVerdict verdict =
    congruent(kummer_side(p, m, classical(m, store)), kummer_side(p, n, classical(n, store)), p, nu + 1UL);
  verdict.violations = std::move(violations);
  return verdict;
}

CongruenceVerdict hb_factorial_congruence(Integer const &p, Integer const &N, unsigned n, MemoStore &store)
{
  require_prime(p);
  if (N < 1)
  {
    throw std::invalid_argument("N must be >= 1");
  }
  // prod_{k=0}^{n} (N+k)!/N! = prod_{k=0}^{n} rising(N+1, k)
  Integer lhs_scale = 1;
  Integer rhs_scale = 1;
  for (unsigned k = 0; k <= n; ++k)
  {
    lhs_scale *= rising(N + 1, k);
    rhs_scale *= factorial(k + 1);
  }
  Rational const lhs = Rational(lhs_scale) * hb(N, n, store);
  Rational const rhs = Rational(rhs_scale) * classical(n, store);

  PadicVal const t = ordp(Integer(N - 1), p);
  CongruenceVerdict verdict;
  if (t.is_infinite())
  {
    verdict = exact_equality(lhs, rhs, p);
  }
  else if (t.value() == 0)
  {
    // everything is congruent modulo p^0
    verdict                  = exact_equality(lhs, rhs, p);
    verdict.modulus_exponent = 0;
    verdict.holds            = true;
  }
  else
  {
    verdict = congruent(lhs, rhs, p, static_cast<unsigned long>(t.value()));
  }
  verdict.n_minus_one_ord = t;
  return verdict;
}

unsigned long ord_threshold_corollary(Integer const &p, unsigned n, unsigned nu)
{
  require_prime(p);
  return nu + 1UL + ord_factorial_product(p, n) + ord_index(p, n);
}

unsigned long ord_threshold_pair(Integer const &p, unsigned m, unsigned n, unsigned nu)
{
  require_prime(p);
  return nu + 1UL + ord_factorial_product(p, m) + std::max(ord_index(p, m), ord_index(p, n));
}

CongruenceVerdict hb_kummer_corollary(Integer const &p, Integer const &N, unsigned n, unsigned nu,
                                      MemoStore &store)
{
  require_prime(p);
  if (N < 1)
  {
    throw std::invalid_argument("N must be >= 1");
  }
  if (n < 1)
  {
    throw std::invalid_argument("n must be >= 1");
  }
  Rational const index(n);
  CongruenceVerdict verdict = congruent(hb(N, n, store) / index, classical(n, store) / index, p, nu + 1UL);
  if (mpz_divisible_p(Integer(n).get_mpz_t(), Integer(p - 1).get_mpz_t()))
  {
    verdict.violations.push_back("hypothesis n ≢ 0 (mod p−1) violated");
  }
  check_threshold(p, N, ord_threshold_corollary(p, n, nu), verdict);
  return verdict;
}

CongruenceVerdict hb_kummer_pair(Integer const &p, Integer const &N, unsigned m, unsigned n, unsigned nu,
                                 MemoStore &store)
{
  require_prime(p);
  if (N < 1)
  {
    throw std::invalid_argument("N must be >= 1");
  }
  CongruenceVerdict probe;
  check_kummer_indices(p, m, n, nu, probe);
  if (m < n)
  {
    probe.violations.push_back("hypothesis m ≥ n violated");
  }
  if (m == 0 || n == 0)
  {
    probe.p = p;
    return probe;
  }
  CongruenceVerdict verdict =
    congruent(kummer_side(p, m, hb(N, m, store)), kummer_side(p, n, hb(N, n, store)), p, nu + 1UL);
  verdict.violations = std::move(probe.violations);
  check_threshold(p, N, ord_threshold_pair(p, m, n, nu), verdict);
  return verdict;
}

Integer n_with_ord(Integer const &p, unsigned long t)
{
  return power(p, t) + 1;
}

}  // namespace hgbern
