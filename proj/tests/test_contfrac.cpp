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

#include "hgbern/combinatorics.hpp"
#include "hgbern/contfrac.hpp"
#include "hgbern/errors.hpp"

#include <doctest.h>

using namespace hgbern;

namespace {

Rational q(long num, long den = 1)
{
  return Rational(Integer(num), Integer(den));
}

// Q_n * sum B_{N,k} x^k/k! - P_n through x^order-1, from recurrence output.
Series defect_through(unsigned N, unsigned n, std::size_t order, MemoStore &store)
{
  ConvergentPair const pair = convergent_rec(N, n);
  return pair.Q.to_series(order) * hb_series(Integer(N), 1, order, store) - pair.P.to_series(order);
}

}  // namespace

TEST_CASE("initial convergents")
{
  auto const first = convergent_rec(2, 1);
  CHECK(first.P == Poly{3, -1});
  CHECK(first.Q == Poly{3});
  CHECK(first.P.str() == "3 - x");
  auto const zeroth = convergent_rec(5, 0);
  CHECK(zeroth.P == Poly{1});
  CHECK(zeroth.Q == Poly{1});
  auto const second = convergent_rec(1, 2);
  CHECK(second.P == Poly{6, -2});
  CHECK(second.Q == Poly{6, 1});
  CHECK_THROWS_AS(convergent_rec(0, 2), std::invalid_argument);
}

TEST_CASE("partial numerators and denominators")
{
  CHECK(partial_denominator(3, 4) == Poly{7});
  CHECK(partial_numerator(3, 4) == Poly{0, 2});
  CHECK(partial_numerator(3, 5) == Poly{0, -5});
  CHECK_THROWS_AS(partial_numerator(3, 1), std::invalid_argument);
}

TEST_CASE("closed forms")
{
  CHECK(convergent_closed(1, 2).P == Poly{6, -2});
  CHECK(convergent_closed(1, 2).Q == Poly{6, 1});
  CHECK(convergent_closed(2, 3) == convergent_rec(2, 3));
  for (unsigned N = 1; N <= 6; ++N)
  {
    auto const rec = convergents_rec(N, 12);
    for (unsigned n = 0; n <= 12; ++n)
    {
      CAPTURE(N);
      CAPTURE(n);
      CHECK(convergent_closed(N, n) == rec[n]);
    }
  }
}

TEST_CASE("degree pattern")
{
  for (unsigned N = 1; N <= 6; ++N)
  {
    auto const rec = convergents_rec(N, 12);
    for (unsigned k = 1; k <= 6; ++k)
    {
      CHECK(rec[2 * k - 1].P.degree() == k);
      CHECK(rec[2 * k].P.degree() == k);
      CHECK(rec[2 * k].Q.degree() == k);
      CHECK(rec[2 * k - 1].Q.degree() <= k - 1);
      if (N >= 2)
      {
        CHECK(rec[2 * k - 1].Q.degree() == k - 1);
      }
      // leading coefficient of Q_{2k} is k!
      CHECK(rec[2 * k].Q.coeff(k) == Rational(factorial(k)));
    }
    for (auto const &pair : rec)
    {
      CHECK_FALSE(pair.Q.coeff(0).is_zero());
    }
  }
}

TEST_CASE("approximation property")
{
  MemoStore store;
  Series const hand = approximation_defect(1, 2, convergent_rec(1, 2), store);
  CHECK(hand.order() == 3);
  CHECK(hand.is_zero());
  CHECK(q(6) * q(1, 12) + q(1) * q(-1, 2) == q(0));
  CHECK(approximation_defect(3, 0, convergent_rec(3, 0), store).is_zero());
  CHECK(approximation_defect(2, 7, convergent_rec(2, 7), store).order() == 8);
  for (unsigned N = 1; N <= 6; ++N)
  {
    for (unsigned n = 0; n <= 12; ++n)
    {
      CHECK(approximation_defect(N, n, convergent_rec(N, n), store).is_zero());
      CHECK(approximation_defect(N, n, convergent_closed(N, n), store).is_zero());
    }
  }
  // A wrong pair is detected.
  ConvergentPair wrong = convergent_rec(2, 4);
  wrong.P += Poly::monomial(q(1), 3);
  CHECK_FALSE(approximation_defect(2, 4, wrong, store).is_zero());
}

TEST_CASE("degree of odd denominators drops at N = 1")
{
  // The x coefficient of Q_3 is (N+3) - (N+1)^2 = -(N+2)(N-1).
  CHECK(convergent_rec(1, 3).Q.degree() == 0);
  for (long N = 1; N <= 6; ++N)
  {
    CHECK(convergent_rec(static_cast<unsigned>(N), 3).Q.coeff(1) == q(-(N + 2) * (N - 1)));
  }
}

TEST_CASE("rising reading of (a)_k breaks the closed form")
{
  // Q_n rebuilt with rising factorials in place of falling ones.
  auto rising_Q = [](unsigned N, unsigned n) {
    long const m   = (static_cast<long>(n) + 1) / 2;
    long const odd = static_cast<long>(n % 2);
    long const deg = odd ? m - 1 : m;
    std::vector<Rational> coeffs;
    for (long j = 0; j <= deg; ++j)
    {
      long const top = 2 * m - j - odd;
      Rational c;
      for (long k = 0; k <= j; ++k)
      {
        Integer const term = rising(Integer(top), static_cast<unsigned>(k)) *
                             binom(Integer(m - k - 1), static_cast<unsigned>(j - k)) *
                             shifted_product(Integer(N), k + 1, top);
        c += (j - k) % 2 == 0 ? Rational(term) : -Rational(term);
      }
      coeffs.push_back(c);
    }
    return Poly(coeffs);
  };
  MemoStore store;
  for (unsigned N = 1; N <= 3; ++N)
  {
    // Through n = 3 only k <= 1 occurs, where both readings coincide.
    CHECK(rising_Q(N, 3) == convergent_rec(N, 3).Q);
    for (unsigned n = 4; n <= 8; ++n)
    {
      ConvergentPair pair = convergent_closed(N, n);
      CHECK(pair.Q == convergent_rec(N, n).Q);
      pair.Q = rising_Q(N, n);
      CHECK_FALSE(approximation_defect(N, n, pair, store).is_zero());
    }
  }
}

TEST_CASE("identity families examples")
{
  MemoStore store;
  auto const e0 = identity_even(2, 1, 0, store);
  CHECK(e0.lhs == q(12));
  CHECK(e0.rhs == q(12));
  auto const e1 = identity_even(1, 2, 3, store);
  CHECK(e1.lhs == q(0));
  CHECK(e1.rhs == q(0));
  CHECK(identity_even(2, 3, 2, store).holds());

  auto const o0 = identity_odd(1, 1, 0, store);
  CHECK(o0.lhs == q(2));
  CHECK(o0.rhs == q(2));
  CHECK(identity_odd(1, 3, 3, store).holds());
  CHECK(identity_odd(3, 2, 3, store).holds());
}

TEST_CASE("identity families hold on their ranges and match the defect series")
{
  MemoStore store;
  for (unsigned N = 1; N <= 4; ++N)
  {
    for (unsigned n = 1; n <= 8; ++n)
    {
      Series const even_prod = convergent_rec(N, 2 * n).Q.to_series(2 * n + 1) * hb_series(Integer(N), 1, 2 * n + 1, store);
      Series const odd_prod  = convergent_rec(N, 2 * n - 1).Q.to_series(2 * n) * hb_series(Integer(N), 1, 2 * n, store);
      for (unsigned h = 0; h <= 2 * n; ++h)
      {
        CAPTURE(N);
        CAPTURE(n);
        CAPTURE(h);
        auto const sides = identity_even(N, n, h, store);
        CHECK(sides.holds());
        CHECK(sides.lhs == even_prod[h]);
        CHECK(sides.rhs == convergent_rec(N, 2 * n).P.coeff(h));
      }
      for (unsigned h = 0; h + 1 <= 2 * n; ++h)
      {
        auto const sides = identity_odd(N, n, h, store);
        CHECK(sides.holds());
        CHECK(sides.lhs == odd_prod[h]);
      }
    }
  }
}

TEST_CASE("identity ranges are sharp")
{
  // One step past the range the convergent no longer matches the series, so
  // the coefficient identity fails there; the functions refuse those h.
  MemoStore store;
  for (unsigned N = 1; N <= 4; ++N)
  {
    for (unsigned n = 1; n <= 8; ++n)
    {
      CHECK_FALSE(defect_through(N, 2 * n, 2 * n + 2, store)[2 * n + 1].is_zero());
      CHECK_FALSE(defect_through(N, 2 * n - 1, 2 * n + 1, store)[2 * n].is_zero());
      CHECK_THROWS_AS(identity_even(N, n, 2 * n + 1, store), PreconditionError);
      CHECK_THROWS_AS(identity_odd(N, n, 2 * n, store), PreconditionError);
    }
  }
  CHECK_THROWS_AS(identity_odd(3, 2, 4, store), PreconditionError);
  CHECK_THROWS_AS(identity_even(1, 0, 0, store), PreconditionError);
}

TEST_CASE("Stirling rewriting of the shifted products")
{
  for (unsigned N = 1; N <= 4; ++N)
  {
    for (unsigned n = 1; n <= 8; ++n)
    {
      for (unsigned j = 0; j <= n; ++j)
      {
        unsigned const top = 2 * n - j;
        Integer sum;
        Integer power = 1;
        for (unsigned i = 1; i <= top; ++i)
        {
          sum += stirling1_unsigned(top, i) * power;
          power *= N;
        }
        CHECK(shifted_product(Integer(N), 1, static_cast<long>(top) - 1) == sum);
      }
    }
  }
  CHECK(shifted_product(Integer(5), 3, 2) == 1);
}

TEST_CASE("classical specializations")
{
  MemoStore store;
  auto const even0 = classical_identity(ClassicalVariant::even, 2, 0, store);
  CHECK(even0.lhs == q(1));
  CHECK(even0.rhs == q(1));
  auto const odd_red = classical_identity(ClassicalVariant::odd_reduced, 2, 4, store);
  CHECK(odd_red.lhs == q(0));
  CHECK(odd_red.rhs == q(0));
  CHECK(classical_identity(ClassicalVariant::even, 3, 2, store).holds());

  CHECK(classical_max_h(ClassicalVariant::even, 4) == 8);
  CHECK(classical_max_h(ClassicalVariant::odd, 4) == 7);
  CHECK(classical_max_h(ClassicalVariant::even_reduced, 4) == 9);
  CHECK(classical_max_h(ClassicalVariant::odd_reduced, 4) == 8);
  CHECK(variant_name(ClassicalVariant::odd_reduced) == "odd-reduced");

  for (auto variant : {ClassicalVariant::even, ClassicalVariant::odd, ClassicalVariant::even_reduced,
                       ClassicalVariant::odd_reduced})
  {
    for (unsigned n = 1; n <= 8; ++n)
    {
      for (unsigned h = 0; h <= classical_max_h(variant, n); ++h)
      {
        CAPTURE(variant_name(variant));
        CAPTURE(n);
        CAPTURE(h);
        CHECK(classical_identity(variant, n, h, store).holds());
      }
      CHECK_THROWS_AS(classical_identity(variant, n, classical_max_h(variant, n) + 1, store), PreconditionError);
    }
  }
}

TEST_CASE("classical double sum equals the general identity at N = 1")
{
  MemoStore store;
  for (unsigned n = 1; n <= 8; ++n)
  {
    for (unsigned h = 0; h <= 2 * n; ++h)
    {
      auto const general = identity_even(1, n, h, store);
      auto const scaled  = classical_identity(ClassicalVariant::even, n, h, store);
      Rational const norm(factorial(2 * n - h + 1));
      CHECK(general.lhs == scaled.lhs * norm);
    }
  }
}
