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

#include "hgbern/routes.hpp"

#include "hgbern/altforms.hpp"
#include "hgbern/errors.hpp"
#include "hgbern/hessenberg.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hgbern {

namespace {

struct RouteEntry
{
  Route route;
  std::string_view name;
};

constexpr RouteEntry kRoutes[] = {
  {Route::recurrence, "recurrence"},
  {Route::comp, "comp"},
  {Route::binom, "binom"},
  {Route::explicit_sum, "explicit"},
  {Route::trudi, "trudi"},
  {Route::det, "det"},
  {Route::descent, "descent"},
  {Route::descent_nested, "descent-nested"},
  {Route::convolution, "convolution"},
};

unsigned small_N(Integer const &N)
{
  if (N > std::numeric_limits<unsigned>::max())
  {
    throw std::invalid_argument("N = " + N.get_str() + " is only supported by the recurrence route");
  }
  return static_cast<unsigned>(N.get_ui());
}

}  // namespace

std::vector<Route> const &all_routes()
{
  static std::vector<Route> const routes = [] {
    std::vector<Route> out;
    for (auto const &entry : kRoutes)
    {
      out.push_back(entry.route);
    }
    return out;
  }();
  return routes;
}

std::string_view route_name(Route route)
{
  for (auto const &entry : kRoutes)
  {
    if (entry.route == route)
    {
      return entry.name;
    }
  }
  return "?";
}

Route route_from_name(std::string_view name)
{
  for (auto const &entry : kRoutes)
  {
    if (entry.name == name)
    {
      return entry.route;
    }
  }
  throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

bool route_applies(Route route, Integer const &N, unsigned r)
{
  switch (route)
  {
  case Route::recurrence:
  case Route::explicit_sum:
  case Route::trudi:
  case Route::det:
    return true;
  case Route::comp:
  case Route::binom:
    return r == 1;
  case Route::descent:
  case Route::descent_nested:
    return r == 1 && N >= 2;
  case Route::convolution:
    return r >= 2;
  }
  return false;
}

Rational compute(Route route, Integer const &N, unsigned r, unsigned n, MemoStore &store)
{
  HBKey{N, r, n}.validate();
  if (route == Route::recurrence)
  {
    return hb_higher(N, r, n, store);
  }
  if (route == Route::comp || route == Route::binom)
  {
    if (r != 1)
    {
      throw PreconditionError("route " + std::string(route_name(route)) + " computes order r = 1 only");
    }
  }
  if (route == Route::descent || route == Route::descent_nested)
  {
    if (r != 1)
    {
      throw PreconditionError("route " + std::string(route_name(route)) + " computes order r = 1 only");
    }
    if (N < 2)
    {
      throw PreconditionError("route " + std::string(route_name(route)) + " needs N >= 2");
    }
  }
  if (n == 0)
  {
    return Rational(1);
  }
  unsigned const small = small_N(N);
  switch (route)
  {
  case Route::recurrence:
    break;
  case Route::comp:
    return hb_explicit_comp(small, n);
  case Route::binom:
    return hb_explicit_binom(small, n);
  case Route::explicit_sum:
    return hb_higher_explicit(small, r, n);
  case Route::trudi:
    return hb_trudi(small, r, n);
  case Route::det:
    return hb_higher_det(small, r, n);
  case Route::descent:
    return hb_descent_step(small, n, store);
  case Route::descent_nested:
    return hb_descent_nested(small, n, store);
  case Route::convolution:
    return hb_higher_convolution(small, r, n, store);
  }
  throw std::logic_error("unhandled route");
}

void SweepConfig::validate() const
{
  if (N_lo < 1 || r_lo < 1)
  {
    throw std::invalid_argument("sweep needs N >= 1 and r >= 1");
  }
  if (N_lo > N_hi || r_lo > r_hi || n_lo > n_hi)
  {
    throw std::invalid_argument("sweep ranges must be nonempty");
  }
  if (routes.size() < 2)
  {
    throw std::invalid_argument("a comparison sweep needs at least two routes");
  }
}

namespace {

struct PointResult
{
  std::size_t comparisons = 0;
  std::optional<Disagreement> disagreement;
};

PointResult evaluate_point(HBKey const &key, std::vector<Route> const &routes, MemoStore &store)
{
  PointResult out;
  std::optional<std::pair<Route, Rational>> reference;
  for (Route route : routes)
  {
    if (!route_applies(route, key.N, key.r))
    {
      continue;
    }
    Rational value = compute(route, key.N, key.r, key.n, store);
    if (!reference)
    {
      reference.emplace(route, std::move(value));
      continue;
    }
    ++out.comparisons;
    if (value != reference->second)
    {
      out.disagreement = Disagreement{key, reference->first, reference->second, route, std::move(value)};
      return out;
    }
  }
  return out;
}

}  // namespace

SweepReport run_sweep(SweepConfig const &config, MemoStore &store)
{
  config.validate();
  std::vector<HBKey> grid;
  for (unsigned N = config.N_lo; N <= config.N_hi; ++N)
  {
    for (unsigned r = config.r_lo; r <= config.r_hi; ++r)
    {
      for (unsigned n = config.n_lo; n <= config.n_hi; ++n)
      {
        grid.push_back({Integer(N), r, n});
      }
    }
  }

  std::vector<PointResult> results(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++)
    {
      try
      {
        results[i] = evaluate_point(grid[i], config.routes, store);
      }
      catch (...)
      {
        std::lock_guard lock(failure_mutex);
        if (!failure)
        {
          failure = std::current_exception();
        }
      }
    }
  };

  unsigned const threads = std::clamp<unsigned>(config.threads, 1, 256);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
  {
    pool.emplace_back(worker);
  }
  worker();
  for (auto &thread : pool)
  {
    thread.join();
  }
  if (failure)
  {
    std::rethrow_exception(failure);
  }

  SweepReport report;
  report.points = grid.size();
  for (auto &result : results)
  {
    report.comparisons += result.comparisons;
    if (!report.first_disagreement && result.disagreement)
    {
      report.first_disagreement = std::move(result.disagreement);
    }
  }
  return report;
}

}  // namespace hgbern
