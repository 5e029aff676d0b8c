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

#pragma once

// Reference values of the hypergeometric Bernoulli numbers B_{N,n} and their
// higher-order variants B_{N,n}^{(r)}, defined through
//
//   (x^N/N! / (e^x - sum_{k<N} x^k/k!))^r = sum_n B_{N,n}^{(r)} x^n/n!
//
// and computed with the defining recurrences. Every other route in the
// library is checked against these functions.

#include "hgbern/rational.hpp"
#include "hgbern/series.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace hgbern {

struct HBKey
{
  Integer N;
  unsigned r = 1;
  unsigned n = 0;

  /// Throws std::invalid_argument unless N >= 1 and r >= 1.
  void validate() const;

  friend bool operator==(HBKey const &a, HBKey const &b)
  {
    return a.N == b.N && a.r == b.r && a.n == b.n;
  }
  friend bool operator<(HBKey const &a, HBKey const &b)
  {
    if (int const c = cmp(a.N, b.N); c != 0)
    {
      return c < 0;
    }
    return std::pair(a.r, a.n) < std::pair(b.r, b.n);
  }
};

struct AuditReport
{
  std::size_t checked = 0;
  std::optional<HBKey> mismatch;
  Rational cached;
  Rational recomputed;

  bool ok() const
  {
    return !mismatch.has_value();
  }
};

/**
 * Memo of computed values keyed by (N, r, n), optionally persisted as a
 * line-delimited text file with records `N r n num/den`.
 *
 * Reads take a shared lock and writes an exclusive one, so a reader sees an
 * entry either absent or complete.
 */
class MemoStore
{
public:
  MemoStore() = default;
  MemoStore(MemoStore const &) = delete;
  MemoStore &operator=(MemoStore const &) = delete;

  std::optional<Rational> get(HBKey const &key) const;

  /// Inserts or overwrites.
  void put(HBKey const &key, Rational value);

  /// Leading run B_0..B_k of the (N, r) row that is fully present.
  std::vector<Rational> row_prefix(Integer const &N, unsigned r, unsigned max_n) const;

  /// Stores values[i] at n = i for entries not yet present.
  void put_row(Integer const &N, unsigned r, std::vector<Rational> const &values);

  std::size_t size() const;
  void clear();
  std::vector<std::pair<HBKey, Rational>> entries() const;

  /// Merges records from `path`. Duplicate keys (within the file or against
  /// existing entries) must agree. Afterwards `audit_samples` random entries
  /// are recomputed and compared. Throws CacheError on any failure.
  void load(std::filesystem::path const &path, unsigned audit_samples = 3, std::uint64_t seed = 0);

  /// Writes all entries sorted by key.
  void save(std::filesystem::path const &path) const;

  /// Recomputes `samples` random entries (all entries when samples == 0) in
  /// a fresh store and compares with the cached values.
  AuditReport audit(unsigned samples, std::uint64_t seed = 0) const;

private:
  mutable std::shared_mutex mutex_;
  std::map<HBKey, Rational> values_;
};

/// Process-wide store used when no store is passed explicitly.
MemoStore &default_store();

/// B_{N,n} = -sum_{k<n} C(N+n, k) / C(N+n, n) B_{N,k}, B_{N,0} = 1.
Rational hb(Integer const &N, unsigned n, MemoStore &store = default_store());

/// Classical Bernoulli number B_n = B_{1,n} (B_1 = -1/2).
Rational classical(unsigned n, MemoStore &store = default_store());

/// The variant with generating function x/(1-e^{-x}): (-1)^n B_n.
Rational signed_variant(unsigned n, MemoStore &store = default_store());

/// B_{N,n}^{(r)} from the r-fold recurrence
///   B_n = -n! sum_{m<n} B_m/m! * sum_{i_1+..+i_r = n-m} prod N!/(N+i_j)!
Rational hb_higher(Integer const &N, unsigned r, unsigned n, MemoStore &store = default_store());

/// B_{N,0..max_n}^{(r)}; fills the memo for the whole row.
std::vector<Rational> hb_row(Integer const &N, unsigned r, unsigned max_n, MemoStore &store = default_store());

/// Coefficients B_{N,k}^{(r)}/k! for k < order.
Series hb_series(Integer const &N, unsigned r, std::size_t order, MemoStore &store = default_store());

/// sum_{m=0}^{n} (n!/m!) B_{N,m}^{(r)} * sum_{i_1+..+i_r=n-m} prod N!/(N+i_j)!
///
/// This is n! (N!)^r times the left side of the generalized recurrence
/// identity, and should vanish for n >= 1. For r = 1 it equals
/// n! N!/(N+n)! * sum_m C(N+n, m) B_{N,m}.
Rational recurrence_residual(Integer const &N, unsigned r, unsigned n, MemoStore &store = default_store());

/// sum over weak compositions i_1+..+i_r = e of prod N!/(N+i_j)!.
/// N!/(N+i)! is taken as 1/rising(N+1, i), so N may be large.
Rational composition_weight(Integer const &N, unsigned r, unsigned e);

}  // namespace hgbern
