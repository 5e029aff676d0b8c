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

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace hgbern;

namespace {

Rational q(long num, long den = 1)
{
  return Rational(Integer(num), Integer(den));
}

bool mentions(CongruenceVerdict const &v, std::string const &needle)
{
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [&](std::string const &line) { return line.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("primality")
{
  CHECK(is_prime(Integer(2)));
  CHECK(is_prime(Integer(5)));
  CHECK(is_prime(Integer(999983)));
  CHECK(is_prime(parse_integer("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK_FALSE(is_prime(Integer(0)));
  CHECK_FALSE(is_prime(Integer(-7)));
  CHECK_FALSE(is_prime(Integer(561)));
  CHECK_FALSE(is_prime(parse_integer("1000000016000000063")));  // 1000000007 * 1000000009
}

TEST_CASE("valuation examples")
{
  CHECK(ordp(q(3, 4), Integer(2)) == PadicVal::finite(-2));
  CHECK(ordp(q(0), Integer(7)).is_infinite());
  CHECK(ordp(q(0), Integer(7)).str() == "inf");
  CHECK(ordp(q(1, 252), Integer(5)) == PadicVal::finite(0));
  CHECK(ordp(Integer(250), Integer(5)) == PadicVal::finite(3));
  CHECK_THROWS_AS(ordp(q(3), Integer(4)), std::invalid_argument);
  CHECK(PadicVal::finite(3) < PadicVal::infinity());
  CHECK((PadicVal::finite(3) + PadicVal::infinity()).is_infinite());
}

TEST_CASE("valuation laws on random rationals")
{
  std::mt19937_64 rng(31);
  for (long prime : {2L, 3L, 5L, 7L})
  {
    Integer const p(prime);
    for (int i = 0; i < 300; ++i)
    {
      Rational x = oracle::random_rational(rng, 2000);
      Rational y = oracle::random_rational(rng, 2000);
      if (x.is_zero() || y.is_zero())
      {
        continue;
      }
      PadicVal const ox = ordp(x, p);
      PadicVal const oy = ordp(y, p);
      CHECK(ordp(x * y, p) == ox + oy);
      PadicVal const sum = ordp(x + y, p);
      CHECK(sum >= std::min(ox, oy));
      if (ox != oy)
      {
        CHECK(sum == std::min(ox, oy));
      }
    }
  }
}

TEST_CASE("residues")
{
  CHECK(residue(q(1, 252), Integer(5), 1) == Integer(3));
  CHECK(residue(q(-1, 2), Integer(5), 2) == Integer(12));
  CHECK_FALSE(residue(q(1, 5), Integer(5), 1).has_value());
}

TEST_CASE("rational congruence")
{
  auto const v = congruent(q(1, 252), q(3), Integer(5), 1);
  CHECK(v.holds);
  CHECK(v.lhs_residue == Integer(3));
  CHECK(v.rhs_residue == Integer(3));
  for (unsigned long k = 1; k <= 6; ++k)
  {
    CHECK(congruent(q(7, 9), q(7, 9), Integer(3), k).holds);
  }
  auto const f = congruent(q(1, 5), q(0), Integer(5), 1);
  CHECK_FALSE(f.holds);
  CHECK(f.difference_ord == PadicVal::finite(-1));
  CHECK_THROWS_AS(congruent(q(1), q(1), Integer(5), 0), std::invalid_argument);
}

TEST_CASE("classical Kummer congruence")
{
  MemoStore store;
  auto const a = kummer_classical(Integer(5), 6, 2, 0, store);
  CHECK(a.holds);
  CHECK(a.hypotheses_met());
  CHECK(a.lhs_residue == Integer(3));
  CHECK(a.rhs_residue == Integer(3));

  auto const b = kummer_classical(Integer(5), 22, 2, 1, store);
  CHECK(b.holds);
  CHECK(b.hypotheses_met());
  CHECK(b.modulus_exponent == 2UL);

  auto const c = kummer_classical(Integer(5), 6, 6, 0, store);
  CHECK(c.holds);
  CHECK(c.difference_ord.is_infinite());

  auto const odd = kummer_classical(Integer(5), 7, 3, 0, store);
  CHECK(mentions(odd, "positive even"));
  auto const period = kummer_classical(Integer(5), 8, 2, 0, store);
  CHECK(mentions(period, "m ≡ n"));
  auto const multiple = kummer_classical(Integer(5), 8, 4, 0, store);
  CHECK(mentions(multiple, "≢ 0 (mod p−1)"));
  CHECK_THROWS_AS(kummer_classical(Integer(6), 2, 2, 0, store), std::invalid_argument);
}

TEST_CASE("classical Kummer grid")
{
  MemoStore store;
  std::size_t checked = 0;
  for (long prime : {5L, 7L, 11L})
  {
    Integer const p(prime);
    for (unsigned nu = 0; (prime - 1) * static_cast<long>(std::pow(prime, nu)) <= 40; ++nu)
    {
      long const period = (prime - 1) * static_cast<long>(std::pow(prime, nu));
      for (unsigned m = 2; m <= 40; m += 2)
      {
        for (unsigned n = 2; n <= 40; n += 2)
        {
          if (m % (prime - 1) == 0 || n % (prime - 1) == 0 || (static_cast<long>(m) - n) % period != 0)
          {
            continue;
          }
          auto const v = kummer_classical(p, m, n, nu, store);
          CHECK(v.hypotheses_met());
          CHECK(v.holds);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("factorial congruence")
{
  MemoStore store;
  CHECK(hb_factorial_congruence(Integer(5), Integer(26), 0, store).holds);
  for (unsigned n = 0; n <= 8; ++n)
  {
    auto const exact = hb_factorial_congruence(Integer(7), Integer(1), n, store);
    CHECK(exact.holds);
    CHECK_FALSE(exact.modulus_exponent.has_value());
    CHECK(exact.difference_ord.is_infinite());
  }
  auto const v = hb_factorial_congruence(Integer(5), Integer(26), 4, store);
  CHECK(v.holds);
  CHECK(v.modulus_exponent == 2UL);
  CHECK(v.n_minus_one_ord == PadicVal::finite(2));

  for (long prime : {3L, 5L})
  {
    for (unsigned long t : {1UL, 2UL})
    {
      Integer const N = n_with_ord(Integer(prime), t);
      for (unsigned n = 0; n <= 8; ++n)
      {
        auto const g = hb_factorial_congruence(Integer(prime), N, n, store);
        CHECK(g.holds);
        CHECK(g.difference_ord >= PadicVal::finite(static_cast<long>(t)));
      }
    }
  }
}

TEST_CASE("thresholds")
{
  CHECK(ord_threshold_corollary(Integer(5), 6, 0) == 4);
  CHECK(ord_threshold_pair(Integer(5), 22, 2, 1) == 48);
  CHECK(ord_threshold_corollary(Integer(7), 2, 0) == 1);
  CHECK(n_with_ord(Integer(5), 4) == 626);
  CHECK(ordp(Integer(n_with_ord(Integer(5), 48) - 1), Integer(5)) == PadicVal::finite(48));
}

TEST_CASE("hypergeometric Kummer corollary")
{
  MemoStore store;
  Integer const N = n_with_ord(Integer(5), 4);
  auto const six = hb_kummer_corollary(Integer(5), N, 6, 0, store);
  CHECK(six.holds);
  CHECK(six.hypotheses_met());
  CHECK(six.lhs_residue == Integer(3));
  CHECK(six.required_ord == 4UL);

  auto const two = hb_kummer_corollary(Integer(5), N, 2, 0, store);
  CHECK(two.holds);
  CHECK(two.lhs_residue == Integer(3));

  auto const one = hb_kummer_corollary(Integer(5), Integer(1), 6, 0, store);
  CHECK(one.holds);
  CHECK(one.difference_ord.is_infinite());

  auto const guard = hb_kummer_corollary(Integer(5), N, 4, 0, store);
  CHECK(mentions(guard, "hypothesis n ≢ 0 (mod p−1) violated"));

  auto const shallow = hb_kummer_corollary(Integer(5), Integer(6), 6, 0, store);
  CHECK_FALSE(shallow.hypotheses_met());
  CHECK(mentions(shallow, "ord_p(N−1)"));
}

TEST_CASE("hypergeometric Kummer pair")
{
  MemoStore store;
  Integer const big = n_with_ord(Integer(5), 48);
  auto const v = hb_kummer_pair(Integer(5), big, 22, 2, 0, store);
  CHECK(v.hypotheses_met());
  CHECK(v.holds);
  CHECK(v.lhs_residue == Integer(3));
  CHECK(v.rhs_residue == Integer(3));

  auto const same = hb_kummer_pair(Integer(5), big, 6, 6, 0, store);
  CHECK(same.holds);

  auto const small = hb_kummer_pair(Integer(5), n_with_ord(Integer(5), 4), 6, 2, 0, store);
  CHECK(small.hypotheses_met());
  CHECK(small.holds);
  CHECK(small.required_ord == 4UL);

  auto const order = hb_kummer_pair(Integer(5), big, 2, 6, 0, store);
  CHECK(mentions(order, "m ≥ n"));
}
