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

#include "hgbern/hgbern.h"

#include "hgbern/congruence.hpp"
#include "hgbern/contfrac.hpp"
#include "hgbern/errors.hpp"
#include "hgbern/hbnum.hpp"
#include "hgbern/routes.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

struct hgb_context
{
  hgbern::MemoStore store;
};

struct hgb_verdict
{
  bool holds = false;
  bool hypotheses_met = true;
  std::vector<std::string> violations;
  std::string lhs;
  std::string rhs;
  std::optional<std::string> lhs_residue;
  std::optional<std::string> rhs_residue;
  long modulus_exponent = -1;
  std::optional<std::string> modulus;
  std::string difference_ord;
  std::optional<std::string> n_minus_one_ord;
  long required_ord = -1;
};

namespace {

thread_local std::string last_error;

char *dup(std::string const &s)
{
  auto *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr)
  {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hgb_status fail(hgb_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

template <typename F>
hgb_status guarded(F &&body)
{
  last_error.clear();
  try
  {
    body();
    return HGB_OK;
  }
  catch (hgbern::PreconditionError const &e)
  {
    return fail(HGB_ERR_PRECONDITION, e.what());
  }
  catch (hgbern::CacheError const &e)
  {
    return fail(HGB_ERR_CACHE, e.what());
  }
  catch (std::invalid_argument const &e)
  {
    return fail(HGB_ERR_INVALID_ARGUMENT, e.what());
  }
  catch (std::filesystem::filesystem_error const &e)
  {
    return fail(HGB_ERR_IO, e.what());
  }
  catch (std::ios_base::failure const &e)
  {
    return fail(HGB_ERR_IO, e.what());
  }
  catch (std::exception const &e)
  {
    return fail(HGB_ERR_INTERNAL, e.what());
  }
  catch (...)
  {
    return fail(HGB_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, char const *what)
{
  if (!condition)
  {
    throw std::invalid_argument(what);
  }
}

std::string key_string(hgbern::HBKey const &key)
{
  return key.N.get_str() + " " + std::to_string(key.r) + " " + std::to_string(key.n);
}

hgb_verdict *wrap(hgbern::CongruenceVerdict const &v)
{
  auto out            = std::make_unique<hgb_verdict>();
  out->holds          = v.holds;
  out->hypotheses_met = v.hypotheses_met();
  out->violations     = v.violations;
  out->lhs            = v.lhs.str();
  out->rhs            = v.rhs.str();
  if (v.lhs_residue)
  {
    out->lhs_residue = v.lhs_residue->get_str();
  }
  if (v.rhs_residue)
  {
    out->rhs_residue = v.rhs_residue->get_str();
  }
  if (v.modulus_exponent)
  {
    out->modulus_exponent = static_cast<long>(*v.modulus_exponent);
    hgbern::Integer power;
    mpz_pow_ui(power.get_mpz_t(), v.p.get_mpz_t(), *v.modulus_exponent);
    out->modulus = power.get_str();
  }
  out->difference_ord = v.difference_ord.str();
  if (v.n_minus_one_ord)
  {
    out->n_minus_one_ord = v.n_minus_one_ord->str();
  }
  if (v.required_ord)
  {
    out->required_ord = static_cast<long>(*v.required_ord);
  }
  return out.release();
}

}  // namespace

extern "C" {

char const *hgb_last_error(void)
{
  return last_error.c_str();
}

void hgb_string_free(char *s)
{
  std::free(s);
}

hgb_status hgb_context_create(hgb_context **out)
{
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new hgb_context();
  });
}

void hgb_context_destroy(hgb_context *ctx)
{
  delete ctx;
}

hgb_status hgb_cache_load(hgb_context *ctx, char const *path, unsigned audit_samples)
{
  return guarded([&] {
    require(ctx != nullptr && path != nullptr, "null argument");
    ctx->store.load(path, audit_samples);
  });
}

hgb_status hgb_cache_save(hgb_context const *ctx, char const *path)
{
  return guarded([&] {
    require(ctx != nullptr && path != nullptr, "null argument");
    ctx->store.save(path);
  });
}

hgb_status hgb_cache_size(hgb_context const *ctx, size_t *out)
{
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    *out = ctx->store.size();
  });
}

hgb_status hgb_cache_audit(hgb_context const *ctx, unsigned samples, uint64_t seed, size_t *checked, int *ok,
                           char **mismatch_key)
{
  return guarded([&] {
    require(ctx != nullptr && checked != nullptr && ok != nullptr && mismatch_key != nullptr, "null argument");
    auto const report = ctx->store.audit(samples, seed);
    *checked          = report.checked;
    *ok               = report.ok() ? 1 : 0;
    *mismatch_key     = report.mismatch ? dup(key_string(*report.mismatch)) : nullptr;
  });
}

hgb_status hgb_inject_fault(hgb_context *ctx, char const *N, unsigned r, unsigned n)
{
  return guarded([&] {
    require(ctx != nullptr && N != nullptr, "null argument");
    hgbern::HBKey const key{hgbern::parse_integer(N), r, n};
    key.validate();
    hgbern::MemoStore scratch;
    ctx->store.put(key, hgbern::hb_higher(key.N, r, n, scratch) + hgbern::Rational(1));
  });
}

size_t hgb_route_count(void)
{
  return hgbern::all_routes().size();
}

char const *hgb_route_name(size_t index)
{
  auto const &routes = hgbern::all_routes();
  return index < routes.size() ? hgbern::route_name(routes[index]).data() : nullptr;
}

hgb_status hgb_compute(hgb_context *ctx, char const *route, char const *N, unsigned r, unsigned n, char **value)
{
  return guarded([&] {
    require(ctx != nullptr && route != nullptr && N != nullptr && value != nullptr, "null argument");
    auto const result = hgbern::compute(hgbern::route_from_name(route), hgbern::parse_integer(N), r, n, ctx->store);
    *value            = dup(result.str());
  });
}

hgb_status hgb_to_decimal(char const *value, unsigned digits, char **out)
{
  return guarded([&] {
    require(value != nullptr && out != nullptr, "null argument");
    *out = dup(hgbern::to_decimal(hgbern::Rational::parse(value), digits));
  });
}

hgb_status hgb_convergents(unsigned N, unsigned n, int closed, char **P, char **Q)
{
  return guarded([&] {
    require(P != nullptr && Q != nullptr, "null argument");
    auto const pair = closed ? hgbern::convergent_closed(N, n) : hgbern::convergent_rec(N, n);
    std::string p   = pair.P.str();
    std::string q   = pair.Q.str();
    *P              = dup(p);
    *Q              = dup(q);
  });
}

hgb_status hgb_convergent_defect(hgb_context *ctx, unsigned N, unsigned n, int *zero, char **defect)
{
  return guarded([&] {
    require(ctx != nullptr && zero != nullptr && defect != nullptr, "null argument");
    auto const series = hgbern::approximation_defect(N, n, hgbern::convergent_rec(N, n), ctx->store);
    *zero             = series.is_zero() ? 1 : 0;
    *defect           = dup(series.str());
  });
}

hgb_status hgb_verify(hgb_context *ctx, hgb_sweep_config const *config, hgb_sweep_report *report)
{
  return guarded([&] {
    require(ctx != nullptr && config != nullptr && report != nullptr, "null argument");
    require(config->route_count == 0 || config->routes != nullptr, "null route list");
    hgbern::SweepConfig sweep;
    sweep.N_lo    = config->N_lo;
    sweep.N_hi    = config->N_hi;
    sweep.r_lo    = config->r_lo;
    sweep.r_hi    = config->r_hi;
    sweep.n_lo    = config->n_lo;
    sweep.n_hi    = config->n_hi;
    sweep.threads = config->threads;
    for (size_t i = 0; i < config->route_count; ++i)
    {
      require(config->routes[i] != nullptr, "null route name");
      sweep.routes.push_back(hgbern::route_from_name(config->routes[i]));
    }
    auto const result = hgbern::run_sweep(sweep, ctx->store);

    *report             = hgb_sweep_report{};
    report->points      = result.points;
    report->comparisons = result.comparisons;
    report->ok          = result.ok() ? 1 : 0;
    if (auto const &d = result.first_disagreement)
    {
      report->key             = dup(key_string(d->key));
      report->reference_route = dup(std::string(hgbern::route_name(d->reference)));
      report->reference_value = dup(d->reference_value.str());
      report->other_route     = dup(std::string(hgbern::route_name(d->other)));
      report->other_value     = dup(d->other_value.str());
    }
  });
}

void hgb_sweep_report_clear(hgb_sweep_report *report)
{
  if (report == nullptr)
  {
    return;
  }
  for (char *s : {report->key, report->reference_route, report->reference_value, report->other_route,
                  report->other_value})
  {
    std::free(s);
  }
  *report = hgb_sweep_report{};
}

hgb_status hgb_congruence_classical(hgb_context *ctx, char const *p, unsigned m, unsigned n, unsigned nu,
                                    hgb_verdict **out)
{
  return guarded([&] {
    require(ctx != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = wrap(hgbern::kummer_classical(hgbern::parse_integer(p), m, n, nu, ctx->store));
  });
}

hgb_status hgb_congruence_hb_factorial(hgb_context *ctx, char const *p, char const *N, unsigned n,
                                       hgb_verdict **out)
{
  return guarded([&] {
    require(ctx != nullptr && p != nullptr && N != nullptr && out != nullptr, "null argument");
    *out = wrap(hgbern::hb_factorial_congruence(hgbern::parse_integer(p), hgbern::parse_integer(N), n, ctx->store));
  });
}

hgb_status hgb_congruence_hb_kummer(hgb_context *ctx, char const *p, char const *N, unsigned n, unsigned nu,
                                    hgb_verdict **out)
{
  return guarded([&] {
    require(ctx != nullptr && p != nullptr && N != nullptr && out != nullptr, "null argument");
    *out = wrap(
      hgbern::hb_kummer_corollary(hgbern::parse_integer(p), hgbern::parse_integer(N), n, nu, ctx->store));
  });
}

hgb_status hgb_congruence_hb_pair(hgb_context *ctx, char const *p, char const *N, unsigned m, unsigned n,
                                  unsigned nu, hgb_verdict **out)
{
  return guarded([&] {
    require(ctx != nullptr && p != nullptr && N != nullptr && out != nullptr, "null argument");
    *out = wrap(
      hgbern::hb_kummer_pair(hgbern::parse_integer(p), hgbern::parse_integer(N), m, n, nu, ctx->store));
  });
}

void hgb_verdict_destroy(hgb_verdict *v)
{
  delete v;
}

int hgb_verdict_holds(hgb_verdict const *v)
{
  return v != nullptr && v->holds ? 1 : 0;
}

int hgb_verdict_hypotheses_met(hgb_verdict const *v)
{
  return v != nullptr && v->hypotheses_met ? 1 : 0;
}

size_t hgb_verdict_violation_count(hgb_verdict const *v)
{
  return v != nullptr ? v->violations.size() : 0;
}

char const *hgb_verdict_violation(hgb_verdict const *v, size_t index)
{
  return v != nullptr && index < v->violations.size() ? v->violations[index].c_str() : nullptr;
}

char const *hgb_verdict_lhs(hgb_verdict const *v)
{
  return v != nullptr ? v->lhs.c_str() : nullptr;
}

char const *hgb_verdict_rhs(hgb_verdict const *v)
{
  return v != nullptr ? v->rhs.c_str() : nullptr;
}

char const *hgb_verdict_lhs_residue(hgb_verdict const *v)
{
  return v != nullptr && v->lhs_residue ? v->lhs_residue->c_str() : nullptr;
}

char const *hgb_verdict_rhs_residue(hgb_verdict const *v)
{
  return v != nullptr && v->rhs_residue ? v->rhs_residue->c_str() : nullptr;
}

long hgb_verdict_modulus_exponent(hgb_verdict const *v)
{
  return v != nullptr ? v->modulus_exponent : -1;
}

char const *hgb_verdict_modulus(hgb_verdict const *v)
{
  return v != nullptr && v->modulus ? v->modulus->c_str() : nullptr;
}

char const *hgb_verdict_difference_ord(hgb_verdict const *v)
{
  return v != nullptr ? v->difference_ord.c_str() : nullptr;
}

char const *hgb_verdict_n_minus_one_ord(hgb_verdict const *v)
{
  return v != nullptr && v->n_minus_one_ord ? v->n_minus_one_ord->c_str() : nullptr;
}

long hgb_verdict_required_ord(hgb_verdict const *v)
{
  return v != nullptr ? v->required_ord : -1;
}

hgb_status hgb_n_from_ordp(char const *p, unsigned long t, char **out)
{
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    hgbern::Integer const prime = hgbern::parse_integer(p);
    if (!hgbern::is_prime(prime))
    {
      throw std::invalid_argument(prime.get_str() + " is not prime");
    }
    *out = dup(hgbern::n_with_ord(prime, t).get_str());
  });
}

}  // extern "C"
