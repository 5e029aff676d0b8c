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

// Named computation routes for B_{N,n}^{(r)} and the cross-route sweep.

#include "hgbern/hbnum.hpp"
#include "hgbern/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hgbern {

enum class Route
{
  recurrence,
  comp,
  binom,
  explicit_sum,
  trudi,
  det,
  descent,
  descent_nested,
  convolution,
};

std::vector<Route> const &all_routes();

std::string_view route_name(Route route);

/// Inverse of route_name. Throws std::invalid_argument for unknown names.
Route route_from_name(std::string_view name);

/// Whether the route is defined at (N, r): comp, binom and the descent routes
/// are order-one only, the descent routes need N >= 2 and convolution is
/// compared for r >= 2 (at r = 1 it returns the stored value unchanged).
bool route_applies(Route route, Integer const &N, unsigned r);

/// B_{N,n}^{(r)} by the given route. Throws std::invalid_argument for an
/// invalid key and PreconditionError when the route does not apply.
Rational compute(Route route, Integer const &N, unsigned r, unsigned n, MemoStore &store = default_store());

struct SweepConfig
{
  unsigned N_lo = 1;
  unsigned N_hi = 5;
  unsigned r_lo = 1;
  unsigned r_hi = 3;
  unsigned n_lo = 0;
  unsigned n_hi = 14;
  std::vector<Route> routes;
  unsigned threads = 1;

  /// Throws std::invalid_argument on empty ranges, N or r below 1, or fewer
  /// than two routes.
  void validate() const;
};

struct Disagreement
{
  HBKey key;
  Route reference;
  Rational reference_value;
  Route other;
  Rational other_value;
};

struct SweepReport
{
  std::size_t points = 0;
  std::size_t comparisons = 0;
  /// Earliest in (N, r, n) order.
  std::optional<Disagreement> first_disagreement;

  bool ok() const
  {
    return !first_disagreement.has_value();
  }
};

/// Evaluates every applicable route at every grid point and compares each
/// against the first applicable route in config order.
SweepReport run_sweep(SweepConfig const &config, MemoStore &store = default_store());

}  // namespace hgbern
