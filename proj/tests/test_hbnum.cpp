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
#include "hgbern/errors.hpp"
#include "hgbern/hbnum.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

using namespace hgbern;

namespace {

Rational q(long num, long den = 1)
{
  return Rational(Integer(num), Integer(den));
}

struct TempFile
{
  std::filesystem::path path;
  explicit TempFile(std::string const &name)
    : path(std::filesystem::temp_directory_path() / ("hgbern_test_" + name))
  {
    std::filesystem::remove(path);
  }
  ~TempFile()
  {
    std::filesystem::remove(path);
  }
  void write(std::string const &text) const
  {
    std::ofstream(path) << text;
  }
};

}  // namespace

TEST_CASE("fixture values")
{
  MemoStore store;
  CHECK(hb(Integer(3), 1, store) == q(-1, 4));
  CHECK(hb(Integer(2), 4, store) == q(-1, 270));
  CHECK(hb(Integer(1), 3, store) == q(0));
  std::vector<Rational> const expected{q(1), q(-1, 3), q(1, 18), q(1, 90), q(-1, 270)};
  CHECK(hb_row(Integer(2), 1, 4, store) == expected);
}

TEST_CASE("classical and signed variants")
{
  MemoStore store;
  CHECK(classical(2, store) == q(1, 6));
  CHECK(classical(0, store) == q(1));
  CHECK(classical(1, store) == q(-1, 2));
  CHECK(signed_variant(1, store) == q(1, 2));
  for (unsigned k = 1; k <= 10; ++k)
  {
    CHECK(classical(2 * k + 1, store).is_zero());
  }
  auto const reference = oracle::akiyama_tanigawa(40);
  for (unsigned n = 0; n <= 40; ++n)
  {
    CHECK(classical(n, store) == reference[n]);
    CHECK(signed_variant(n, store) == (n % 2 == 0 ? reference[n] : -reference[n]));
  }
  // sum_{m=0}^{n} C(n+1, m) signed_variant(m) = n + 1
  for (unsigned n = 1; n <= 30; ++n)
  {
    Rational sum;
    for (unsigned m = 0; m <= n; ++m)
    {
      sum += Rational(binom(Integer(n + 1), m)) * signed_variant(m, store);
    }
    CHECK(sum == Rational(n + 1));
  }
}

TEST_CASE("defining identity sum C(N+n, m) B_{N,m} = 0")
{
  MemoStore store;
  for (unsigned N = 1; N <= 8; ++N)
  {
    auto const row = hb_row(Integer(N), 1, 40, store);
    for (unsigned n = 1; n <= 40; ++n)
    {
      Rational sum;
      for (unsigned m = 0; m <= n; ++m)
      {
        sum += Rational(binom(Integer(N + n), m)) * row[m];
      }
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("symbolic spot checks")
{
  MemoStore store;
  for (long N = 1; N <= 10; ++N)
  {
    Integer const bigN(N);
    CHECK(hb(bigN, 1, store) == q(-1, N + 1));
    CHECK(hb(bigN, 2, store) == q(2, (N + 1) * (N + 1) * (N + 2)));
    CHECK(hb(bigN, 3, store) == q(6 * (N - 1), (N + 1) * (N + 1) * (N + 1) * (N + 2) * (N + 3)));
  }
  // The recurrence handles N far beyond machine integers.
  Integer const huge = parse_integer("1000000000000000000000000000001");
  CHECK(hb(huge, 1, store) == Rational(Integer(-1), huge + 1));
  CHECK(hb(huge, 2, store) == Rational(Integer(2), (huge + 1) * (huge + 1) * (huge + 2)));
}

TEST_CASE("higher order values")
{
  MemoStore store;
  CHECK(hb_higher(Integer(1), 2, 1, store) == q(-1));
  CHECK(hb_higher(Integer(2), 3, 0, store) == q(1));
  for (unsigned N = 1; N <= 5; ++N)
  {
    for (unsigned n = 0; n <= 10; ++n)
    {
      CHECK(hb_higher(Integer(N), 1, n, store) == hb(Integer(N), n, store));
    }
    for (unsigned r = 1; r <= 4; ++r)
    {
      // B^{(r)}_{N,1} = -r/(N+1)
      CHECK(hb_higher(Integer(N), r, 1, store) == q(-static_cast<long>(r), N + 1));
    }
  }
}

TEST_CASE("recurrence agrees with power series inversion")
{
  MemoStore store;
  for (unsigned N = 1; N <= 5; ++N)
  {
    for (unsigned r = 1; r <= 3; ++r)
    {
      auto const reference = oracle::hb_by_series(N, r, 16);
      auto const row       = hb_row(Integer(N), r, 16, store);
      CHECK(row == reference);
    }
  }
}

TEST_CASE("generating series coefficients")
{
  MemoStore store;
  Series const s = hb_series(Integer(1), 1, 3, store);
  CHECK(s.coefficients() == std::vector<Rational>{q(1), q(-1, 2), q(1, 12)});
  CHECK(hb_series(Integer(2), 1, 2, store).coefficients() == std::vector<Rational>{q(1), q(-1, 3)});
  for (unsigned N = 1; N <= 4; ++N)
  {
    for (unsigned r = 1; r <= 3; ++r)
    {
      Series const t = hb_series(Integer(N), r, 8, store);
      CHECK(t[0] == q(1));
      for (unsigned i = 0; i < 8; ++i)
      {
        CHECK(t[i] == hb_higher(Integer(N), r, i, store) / Rational(factorial(i)));
      }
    }
  }
}

TEST_CASE("recurrence residual vanishes")
{
  MemoStore store;
  CHECK(recurrence_residual(Integer(2), 1, 3, store).is_zero());
  CHECK(recurrence_residual(Integer(1), 2, 1, store).is_zero());
  CHECK(recurrence_residual(Integer(3), 2, 5, store).is_zero());
  for (unsigned N = 1; N <= 4; ++N)
  {
    for (unsigned r = 1; r <= 3; ++r)
    {
      for (unsigned n = 1; n <= 10; ++n)
      {
        CHECK(recurrence_residual(Integer(N), r, n, store).is_zero());
      }
    }
  }
}

TEST_CASE("composition weights")
{
  CHECK(composition_weight(Integer(1), 2, 1) == q(1));
  for (unsigned N = 1; N <= 4; ++N)
  {
    for (unsigned e = 0; e <= 6; ++e)
    {
      CHECK(composition_weight(Integer(N), 1, e) == Rational(factorial(N), factorial(N + e)));
    }
    CHECK(composition_weight(Integer(N), 3, 0) == q(1));
  }
}

TEST_CASE("invalid keys are rejected")
{
  MemoStore store;
  CHECK_THROWS_AS(hb(Integer(0), 3, store), std::invalid_argument);
  CHECK_THROWS_AS(hb_higher(Integer(2), 0, 3, store), std::invalid_argument);
  CHECK_THROWS_AS(hb_higher(Integer(-4), 1, 3, store), std::invalid_argument);
  CHECK_THROWS_AS((HBKey{Integer(0), 1, 0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((HBKey{Integer(1), 1, 0}.validate()));
}

TEST_CASE("memo store rows")
{
  MemoStore store;
  hb_higher(Integer(2), 2, 10, store);
  for (unsigned n = 0; n <= 10; ++n)
  {
    CHECK(store.get({Integer(2), 2, n}).has_value());
  }
  CHECK_FALSE(store.get({Integer(2), 2, 11}).has_value());
  CHECK(store.row_prefix(Integer(2), 2, 20).size() == 11);
  store.clear();
  CHECK(store.size() == 0);
}

TEST_CASE("cache save and load round trip")
{
  TempFile file("roundtrip.cache");
  MemoStore store;
  hb_row(Integer(3), 1, 12, store);
  hb_row(Integer(2), 3, 6, store);
  store.save(file.path);

  MemoStore loaded;
  loaded.load(file.path, 0);
  CHECK(loaded.entries() == store.entries());

  // Record order does not matter.
  std::ifstream in(file.path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
  {
    lines.push_back(line);
  }
  std::mt19937_64 rng(7);
  std::shuffle(lines.begin(), lines.end(), rng);
  std::string shuffled;
  for (auto const &line : lines)
  {
    shuffled += line + "\n";
  }
  TempFile other("shuffled.cache");
  other.write(shuffled);
  MemoStore reloaded;
  reloaded.load(other.path);
  CHECK(reloaded.entries() == store.entries());
}

TEST_CASE("cache consistency failures")
{
  TempFile file("bad.cache");

  file.write("2 1 1 -1/3\n2 1 1 -1/3\n");
  MemoStore agreeing;
  CHECK_NOTHROW(agreeing.load(file.path));
  CHECK(agreeing.size() == 1);

  file.write("2 1 1 -1/3\n2 1 1 1/3\n");
  MemoStore conflicting;
  CHECK_THROWS_AS(conflicting.load(file.path), CacheError);

  file.write("2 1 1 -1/3 extra\n");
  MemoStore malformed;
  CHECK_THROWS_AS(malformed.load(file.path), CacheError);

  file.write("0 1 1 -1/3\n");
  MemoStore bad_key;
  CHECK_THROWS_AS(bad_key.load(file.path), CacheError);

  file.write("2 1 1 1/3\n");
  MemoStore memory;
  memory.put({Integer(2), 1, 1}, q(-1, 3));
  CHECK_THROWS_AS(memory.load(file.path, 0), CacheError);

  // A wrong value is caught by the audit when it is sampled.
  MemoStore audited;
  CHECK_THROWS_AS(audited.load(file.path, 3), CacheError);

  MemoStore missing;
  CHECK_THROWS_AS(missing.load(file.path.string() + ".absent"), CacheError);
}

TEST_CASE("audit locates a corrupted entry")
{
  MemoStore store;
  hb_row(Integer(4), 1, 8, store);
  CHECK(store.audit(0).ok());
  CHECK(store.audit(0).checked == 9);
  CHECK(store.audit(3, 11).checked == 3);
  store.put({Integer(4), 1, 5}, q(12345));
  auto const report = store.audit(0);
  REQUIRE_FALSE(report.ok());
  CHECK(*report.mismatch == HBKey{Integer(4), 1, 5});
  CHECK(report.cached == q(12345));
  CHECK(report.recomputed == hb(Integer(4), 5));
}

TEST_CASE("concurrent readers and writers see complete values")
{
  MemoStore store;
  std::vector<std::vector<Rational>> expected;
  for (unsigned N = 1; N <= 6; ++N)
  {
    expected.push_back(oracle::hb_by_series(N, 2, 14));
  }
  std::atomic<bool> mismatch{false};
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < 8; ++t)
  {
    threads.emplace_back([&, t] {
      for (unsigned round = 0; round < 3; ++round)
      {
        for (unsigned i = 0; i < 6; ++i)
        {
          unsigned const N = 1 + (i + t) % 6;
          unsigned const n = (t * 5 + round * 3 + i) % 15;
          if (hb_higher(Integer(N), 2, n, store) != expected[N - 1][n])
          {
            mismatch = true;
          }
          if (auto cached = store.get({Integer(N), 2, n}); cached && *cached != expected[N - 1][n])
          {
            mismatch = true;
          }
        }
      }
    });
  }
  for (auto &thread : threads)
  {
    thread.join();
  }
  CHECK_FALSE(mismatch.load());
}
