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

#include "hgbern/hbnum.hpp"

#include "hgbern/combinatorics.hpp"
#include "hgbern/errors.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

namespace hgbern {

void HBKey::validate() const
{
  if (N < 1)
  {
    throw std::invalid_argument("N must be >= 1, got " + N.get_str());
  }
  if (r < 1)
  {
    throw std::invalid_argument("r must be >= 1");
  }
}

// ---------------------------------------------------------------------------
// MemoStore

std::optional<Rational> MemoStore::get(HBKey const &key) const
{
  std::shared_lock lock(mutex_);
  auto it = values_.find(key);
  if (it == values_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

void MemoStore::put(HBKey const &key, Rational value)
{
  std::unique_lock lock(mutex_);
  values_.insert_or_assign(key, std::move(value));
}

std::vector<Rational> MemoStore::row_prefix(Integer const &N, unsigned r, unsigned max_n) const
{
  std::vector<Rational> out;
  std::shared_lock lock(mutex_);
  auto it = values_.find(HBKey{N, r, 0});
  while (it != values_.end() && it->first.N == N && it->first.r == r && it->first.n == out.size() &&
         out.size() <= max_n)
  {
    out.push_back(it->second);
    ++it;
  }
  return out;
}

void MemoStore::put_row(Integer const &N, unsigned r, std::vector<Rational> const &values)
{
  std::unique_lock lock(mutex_);
  for (unsigned n = 0; n < values.size(); ++n)
  {
    values_.try_emplace(HBKey{N, r, n}, values[n]);
  }
}

std::size_t MemoStore::size() const
{
  std::shared_lock lock(mutex_);
  return values_.size();
}

void MemoStore::clear()
{
  std::unique_lock lock(mutex_);
  values_.clear();
}

std::vector<std::pair<HBKey, Rational>> MemoStore::entries() const
{
  std::shared_lock lock(mutex_);
  return {values_.begin(), values_.end()};
}

void MemoStore::load(std::filesystem::path const &path, unsigned audit_samples, std::uint64_t seed)
{
  std::ifstream in(path);
  if (!in)
  {
    throw CacheError("cannot open cache file " + path.string());
  }

  std::map<HBKey, Rational> incoming;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty())
    {
      continue;
    }
    std::istringstream fields(line);
    std::string n_text, value_text, extra;
    HBKey key;
    if (!(fields >> n_text >> key.r >> key.n >> value_text) || (fields >> extra))
    {
      throw CacheError(path.string() + ":" + std::to_string(line_no) + ": malformed record");
    }
    Rational value;
    try
    {
      key.N = parse_integer(n_text);
      key.validate();
      value = Rational::parse(value_text);
    }
    catch (std::invalid_argument const &e)
    {
      throw CacheError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    auto [it, inserted] = incoming.try_emplace(key, value);
    if (!inserted && it->second != value)
    {
      throw CacheError(path.string() + ":" + std::to_string(line_no) + ": duplicate key " + key.N.get_str() +
                       " " + std::to_string(key.r) + " " + std::to_string(key.n) + " with conflicting values");
    }
  }

  {
    std::unique_lock lock(mutex_);
    for (auto const &[key, value] : incoming)
    {
      auto it = values_.find(key);
      if (it != values_.end() && it->second != value)
      {
        throw CacheError("cache record for " + key.N.get_str() + " " + std::to_string(key.r) + " " +
                         std::to_string(key.n) + " disagrees with the value in memory");
      }
    }
    values_.insert(incoming.begin(), incoming.end());
  }

  if (audit_samples > 0)
  {
    AuditReport const report = audit(audit_samples, seed);
    if (!report.ok())
    {
      auto const &k = *report.mismatch;
      throw CacheError("cache audit failed at " + k.N.get_str() + " " + std::to_string(k.r) + " " +
                       std::to_string(k.n) + ": cached " + report.cached.str() + ", recomputed " +
                       report.recomputed.str());
    }
  }
}

void MemoStore::save(std::filesystem::path const &path) const
{
  std::ofstream out(path, std::ios::trunc);
  if (!out)
  {
    throw CacheError("cannot write cache file " + path.string());
  }
  for (auto const &[key, value] : entries())
  {
    out << key.N.get_str() << ' ' << key.r << ' ' << key.n << ' ' << value.str() << '\n';
  }
}

AuditReport MemoStore::audit(unsigned samples, std::uint64_t seed) const
{
  auto all = entries();
  AuditReport report;
  if (samples != 0 && samples < all.size())
  {
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(samples);
  }
  MemoStore fresh;
  for (auto const &[key, value] : all)
  {
    Rational const recomputed = hb_higher(key.N, key.r, key.n, fresh);
    ++report.checked;
    if (recomputed != value)
    {
      report.mismatch   = key;
      report.cached     = value;
      report.recomputed = recomputed;
      break;
    }
  }
  return report;
}

MemoStore &default_store()
{
  static MemoStore store;
  return store;
}

// ---------------------------------------------------------------------------
// Recurrences

namespace {

std::vector<Rational> inverse_risings(Integer const &N, unsigned max_i)
{
  // N!/(N+i)! = 1/((N+1)(N+2)...(N+i))
  std::vector<Rational> out;
  out.reserve(max_i + 1);
  Integer running = 1;
  out.emplace_back(1);
  for (unsigned i = 1; i <= max_i; ++i)
  {
    running *= N + i;
    out.emplace_back(Integer(1), running);
  }
  return out;
}

Rational weight_sum(std::vector<Rational> const &inv, unsigned r, unsigned e)
{
  Rational total;
  enumerate_compositions({e, r, 0}, [&](std::span<unsigned const> parts) {
    Rational term = 1;
    for (unsigned i : parts)
    {
      term *= inv[i];
    }
    total += term;
  });
  return total;
}

void extend_row_r1(Integer const &N, std::vector<Rational> &row, unsigned max_n)
{
  while (row.size() <= max_n)
  {
    unsigned const n = static_cast<unsigned>(row.size());
    Integer const top = N + n;
    Rational const denom(binom(top, n));
    Rational acc;
    for (unsigned k = 0; k < n; ++k)
    {
      acc += Rational(binom(top, k)) * row[k];
    }
    row.push_back(-acc / denom);
  }
}

void extend_row(Integer const &N, unsigned r, std::vector<Rational> &row, unsigned max_n)
{
  auto const inv = inverse_risings(N, max_n);
  std::vector<Rational> weights;
  weights.reserve(max_n + 1);
  for (unsigned e = 0; e <= max_n; ++e)
  {
    weights.push_back(weight_sum(inv, r, e));
  }
  while (row.size() <= max_n)
  {
    unsigned const n = static_cast<unsigned>(row.size());
    // sum_{m<n} B_m/m! * M_r(n-m), scaled by -n!
    Rational acc;
    for (unsigned m = 0; m < n; ++m)
    {
      acc += row[m] / Rational(factorial(m)) * weights[n - m];
    }
    row.push_back(-Rational(factorial(n)) * acc);
  }
}

}  // namespace

Rational composition_weight(Integer const &N, unsigned r, unsigned e)
{
  HBKey{N, r, e}.validate();
  return weight_sum(inverse_risings(N, e), r, e);
}

std::vector<Rational> hb_row(Integer const &N, unsigned r, unsigned max_n, MemoStore &store)
{
  HBKey{N, r, max_n}.validate();
  std::vector<Rational> row = store.row_prefix(N, r, max_n);
  if (row.size() > max_n)
  {
    row.resize(max_n + 1);
    return row;
  }
  if (row.empty())
  {
    row.emplace_back(1);
  }
  if (r == 1)
  {
    extend_row_r1(N, row, max_n);
  }
  else
  {
    extend_row(N, r, row, max_n);
  }
  store.put_row(N, r, row);
  return row;
}

Rational hb(Integer const &N, unsigned n, MemoStore &store)
{
  return hb_higher(N, 1, n, store);
}

Rational hb_higher(Integer const &N, unsigned r, unsigned n, MemoStore &store)
{
  HBKey const key{N, r, n};
  key.validate();
  if (auto cached = store.get(key))
  {
    return *cached;
  }
  return hb_row(N, r, n, store)[n];
}

Rational classical(unsigned n, MemoStore &store)
{
  return hb(Integer(1), n, store);
}

Rational signed_variant(unsigned n, MemoStore &store)
{
  Rational const b = classical(n, store);
  return n % 2 == 0 ? b : -b;
}

Series hb_series(Integer const &N, unsigned r, std::size_t order, MemoStore &store)
{
  if (order == 0)
  {
    throw std::invalid_argument("series order must be >= 1");
  }
  auto const row = hb_row(N, r, static_cast<unsigned>(order - 1), store);
  Series out(order);
  for (std::size_t k = 0; k < order; ++k)
  {
    out[k] = row[k] / Rational(factorial(static_cast<unsigned>(k)));
  }
  return out;
}

Rational recurrence_residual(Integer const &N, unsigned r, unsigned n, MemoStore &store)
{
  auto const row = hb_row(N, r, n, store);
  auto const inv = inverse_risings(N, n);
  Rational total;
  for (unsigned m = 0; m <= n; ++m)
  {
    total += Rational(factorial(n)) / Rational(factorial(m)) * row[m] * weight_sum(inv, r, n - m);
  }
  return total;
}

}  // namespace hgbern
