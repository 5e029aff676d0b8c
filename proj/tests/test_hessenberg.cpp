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

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hgbern;

namespace {

Rational q(long num, long den = 1)
{
  return Rational(Integer(num), Integer(den));
}

ToeplitzHessenbergSpec random_spec(std::mt19937_64 &rng, std::size_t m, bool unit)
{
  ToeplitzHessenbergSpec spec;
  spec.a0 = unit ? q(1) : oracle::random_rational(rng, 9);
  for (std::size_t i = 0; i < m; ++i)
  {
    spec.entries.push_back(oracle::random_rational(rng, 9));
  }
  return spec;
}

}  // namespace

TEST_CASE("small determinants")
{
  CHECK(toeplitz_hessenberg_det({1, {q(7, 3)}}) == q(7, 3));
  CHECK(toeplitz_hessenberg_det({1, {}}) == q(1));
  // [[1/2, 1], [1/6, 1/2]]
  Rational const d = toeplitz_hessenberg_det({1, {q(1, 2), q(1, 6)}});
  CHECK(d == q(1, 12));
  CHECK(d * q(2) == q(1, 6));
  CHECK(trudi_expand({1, {q(1, 2), q(1, 6)}}) == q(1, 12));
  CHECK(trudi_expand({1, {q(5)}}) == q(5));
  CHECK_THROWS_AS(trudi_expand({1, {}}), PreconditionError);
}

TEST_CASE("materialized matrix shape")
{
  ToeplitzHessenbergSpec const spec{q(2), {q(1), q(3), q(5)}};
  DenseMatrix const a = materialize(spec);
  CHECK(a == oracle::hessenberg_matrix(spec.a0, spec.entries));
  CHECK(a[0][1] == q(2));
  CHECK(a[0][2] == q(0));
  CHECK(a[2][0] == q(5));
}

TEST_CASE("recursion matches cofactor expansion")
{
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial)
  {
    std::size_t const m = 1 + static_cast<std::size_t>(trial % 6);
    auto const spec     = random_spec(rng, m, trial % 2 == 0);
    Rational const brute = oracle::cofactor_det(oracle::hessenberg_matrix(spec.a0, spec.entries));
    CHECK(toeplitz_hessenberg_det(spec) == brute);
    auto const minors = toeplitz_hessenberg_minors(spec);
    REQUIRE(minors.size() == m + 1);
    CHECK(minors.back() == brute);
  }
}

TEST_CASE("partition expansion matches the determinant")
{
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial)
  {
    std::size_t const m = 1 + static_cast<std::size_t>(trial % 7);
    auto const spec     = random_spec(rng, m, trial % 3 == 0);
    CHECK(trudi_expand(spec) == toeplitz_hessenberg_det(spec));
  }
  std::mt19937_64 brioschi(4);
  for (int trial = 0; trial < 20; ++trial)
  {
    auto spec = random_spec(brioschi, 4, true);
    spec.a0   = q(2);
    CHECK(trudi_expand(spec) == oracle::cofactor_det(oracle::hessenberg_matrix(spec.a0, spec.entries)));
  }
}

TEST_CASE("determinant expression of B_{N,n}")
{
  CHECK(hb_det(2, 4) == q(-1, 270));
  CHECK(hb_det(1, 6) == q(1, 42));
  CHECK(hb_higher_det(1, 2, 1) == q(-1));
  MemoStore store;
  for (unsigned N = 1; N <= 5; ++N)
  {
    for (unsigned r = 1; r <= 3; ++r)
    {
      auto const row = hb_row(Integer(N), r, 20, store);
      for (unsigned n = 1; n <= 20; ++n)
      {
        CHECK(hb_higher_det(N, r, n) == row[n]);
        if (r == 1)
        {
          CHECK(hb_det(N, n) == row[n]);
        }
      }
    }
  }
}

TEST_CASE("inversion pair from the Bernoulli values")
{
  MemoStore store;
  auto make_pair = [&](unsigned N, unsigned r, unsigned n) {
    std::vector<Rational> alphas;
    std::vector<Rational> rs;
    for (unsigned k = 1; k <= n; ++k)
    {
      Rational const b = hb_higher(Integer(N), r, k, store) / Rational(factorial(k));
      alphas.push_back(k % 2 == 0 ? b : -b);
      rs.push_back(mr(N, r, k));
    }
    return std::pair{alphas, rs};
  };
  {
    auto const [alphas, rs] = make_pair(2, 1, 5);
    CHECK(inversion_pair_check(alphas, rs).ok());
  }
  for (unsigned N = 1; N <= 4; ++N)
  {
    for (unsigned r = 1; r <= 3; ++r)
    {
      auto const [alphas, rs] = make_pair(N, r, 12);
      auto const verdict      = inversion_pair_check(alphas, rs);
      CHECK(verdict.ok());
      CHECK(verdict.matrix_inverse);
    }
  }
}

TEST_CASE("inversion pair edge and failure cases")
{
  std::vector<Rational> const zeros(6);
  CHECK(inversion_pair_check(zeros, zeros).ok());

  // Random R, alpha built as determinants of leading blocks.
  std::mt19937_64 rng(8);
  std::vector<Rational> rs;
  for (int k = 0; k < 6; ++k)
  {
    rs.push_back(oracle::random_rational(rng, 7));
  }
  std::vector<Rational> alphas;
  for (std::size_t k = 1; k <= rs.size(); ++k)
  {
    std::vector<Rational> const head(rs.begin(), rs.begin() + static_cast<long>(k));
    alphas.push_back(oracle::cofactor_det(oracle::hessenberg_matrix(q(1), head)));
  }
  auto const good = inversion_pair_check(alphas, rs);
  CHECK(good.ok());

  // Explicit product of the two banded matrices.
  std::vector<Rational> left{q(1)};
  std::vector<Rational> right{q(1)};
  for (std::size_t k = 0; k < rs.size(); ++k)
  {
    left.push_back(alphas[k]);
    right.push_back(k % 2 == 0 ? -rs[k] : rs[k]);
  }
  DenseMatrix const product = multiply(unit_lower_toeplitz(left), unit_lower_toeplitz(right));
  for (std::size_t i = 0; i < product.size(); ++i)
  {
    for (std::size_t j = 0; j < product.size(); ++j)
    {
      CHECK(product[i][j] == q(i == j ? 1 : 0));
    }
  }

  alphas[3] += q(1);
  auto const bad = inversion_pair_check(alphas, rs);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.alpha_from_r);
  REQUIRE(bad.first_bad_index.has_value());
  CHECK(*bad.first_bad_index == 4);
  CHECK_FALSE(bad.failure.empty());

  std::vector<Rational> const shorter(3);
  CHECK_THROWS_AS(inversion_pair_check(shorter, rs), std::invalid_argument);
}
