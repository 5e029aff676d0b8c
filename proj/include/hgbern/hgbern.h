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

#ifndef HGBERN_H
#define HGBERN_H

/* C interface to the hgbern library.
 *
 * Every function returns an hgb_status. On failure a message is available
 * from hgb_last_error() until the next call on the same thread. Strings
 * returned through char** out-parameters are owned by the caller and are
 * released with hgb_string_free. Integers cross the boundary as decimal
 * strings and rationals as "num/den". */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HGB_API __declspec(dllexport)
#else
#define HGB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hgb_status
{
  HGB_OK = 0,
  HGB_ERR_INVALID_ARGUMENT = 1, /* bad key, range, prime or route name */
  HGB_ERR_PRECONDITION = 2,     /* route or identity outside its domain */
  HGB_ERR_CACHE = 3,            /* cache file inconsistent or audit failed */
  HGB_ERR_IO = 4,
  HGB_ERR_INTERNAL = 5
} hgb_status;

typedef struct hgb_context hgb_context;
typedef struct hgb_verdict hgb_verdict;

HGB_API char const *hgb_last_error(void);
HGB_API void hgb_string_free(char *s);

/* Context: owns the memo store shared by all computations made through it. */
HGB_API hgb_status hgb_context_create(hgb_context **out);
HGB_API void hgb_context_destroy(hgb_context *ctx);

HGB_API hgb_status hgb_cache_load(hgb_context *ctx, char const *path, unsigned audit_samples);
HGB_API hgb_status hgb_cache_save(hgb_context const *ctx, char const *path);
HGB_API hgb_status hgb_cache_size(hgb_context const *ctx, size_t *out);

/* Recomputes `samples` random cached entries (0 = all). *ok is 0 on a
 * mismatch and *mismatch_key then holds "N r n". */
HGB_API hgb_status hgb_cache_audit(hgb_context const *ctx, unsigned samples, uint64_t seed, size_t *checked,
                                   int *ok, char **mismatch_key);

/* Test hook: stores the correct value of (N, r, n) plus one. */
HGB_API hgb_status hgb_inject_fault(hgb_context *ctx, char const *N, unsigned r, unsigned n);

/* Route names: recurrence, comp, binom, explicit, trudi, det, descent,
 * descent-nested, convolution. */
HGB_API size_t hgb_route_count(void);
HGB_API char const *hgb_route_name(size_t index);

HGB_API hgb_status hgb_compute(hgb_context *ctx, char const *route, char const *N, unsigned r, unsigned n,
                               char **value);

/* `digits` decimal places of a "num/den" value, rounded half away from zero. */
HGB_API hgb_status hgb_to_decimal(char const *value, unsigned digits, char **out);

/* P_n and Q_n printed in ascending powers of x. closed != 0 selects the
 * closed form, otherwise the recurrence. */
HGB_API hgb_status hgb_convergents(unsigned N, unsigned n, int closed, char **P, char **Q);

/* *zero is 1 when Q_n * series - P_n vanishes through x^n; *defect is the
 * printed truncated series. */
HGB_API hgb_status hgb_convergent_defect(hgb_context *ctx, unsigned N, unsigned n, int *zero, char **defect);

typedef struct hgb_sweep_config
{
  unsigned N_lo, N_hi;
  unsigned r_lo, r_hi;
  unsigned n_lo, n_hi;
  char const *const *routes;
  size_t route_count;
  unsigned threads;
} hgb_sweep_config;

typedef struct hgb_sweep_report
{
  size_t points;
  size_t comparisons;
  int ok;
  /* Set when ok == 0; released by hgb_sweep_report_clear. */
  char *key; /* "N r n" */
  char *reference_route;
  char *reference_value;
  char *other_route;
  char *other_value;
} hgb_sweep_report;

HGB_API hgb_status hgb_verify(hgb_context *ctx, hgb_sweep_config const *config, hgb_sweep_report *report);
HGB_API void hgb_sweep_report_clear(hgb_sweep_report *report);

/* Congruence checks. Hypothesis violations do not fail the call; they are
 * listed on the verdict. */
HGB_API hgb_status hgb_congruence_classical(hgb_context *ctx, char const *p, unsigned m, unsigned n, unsigned nu,
                                            hgb_verdict **out);
HGB_API hgb_status hgb_congruence_hb_factorial(hgb_context *ctx, char const *p, char const *N, unsigned n,
                                               hgb_verdict **out);
HGB_API hgb_status hgb_congruence_hb_kummer(hgb_context *ctx, char const *p, char const *N, unsigned n,
                                            unsigned nu, hgb_verdict **out);
HGB_API hgb_status hgb_congruence_hb_pair(hgb_context *ctx, char const *p, char const *N, unsigned m, unsigned n,
                                          unsigned nu, hgb_verdict **out);
HGB_API void hgb_verdict_destroy(hgb_verdict *v);

HGB_API int hgb_verdict_holds(hgb_verdict const *v);
HGB_API int hgb_verdict_hypotheses_met(hgb_verdict const *v);
HGB_API size_t hgb_verdict_violation_count(hgb_verdict const *v);
HGB_API char const *hgb_verdict_violation(hgb_verdict const *v, size_t index);
HGB_API char const *hgb_verdict_lhs(hgb_verdict const *v);
HGB_API char const *hgb_verdict_rhs(hgb_verdict const *v);
/* NULL when the side is not p-integral or the check is exact. */
HGB_API char const *hgb_verdict_lhs_residue(hgb_verdict const *v);
HGB_API char const *hgb_verdict_rhs_residue(hgb_verdict const *v);
/* -1 for exact equality. */
HGB_API long hgb_verdict_modulus_exponent(hgb_verdict const *v);
/* p^k as a decimal string; NULL for exact equality. */
HGB_API char const *hgb_verdict_modulus(hgb_verdict const *v);
/* Decimal or "inf". */
HGB_API char const *hgb_verdict_difference_ord(hgb_verdict const *v);
/* NULL when not applicable. */
HGB_API char const *hgb_verdict_n_minus_one_ord(hgb_verdict const *v);
/* -1 when not applicable. */
HGB_API long hgb_verdict_required_ord(hgb_verdict const *v);

/* 1 + p^t as a decimal string. */
HGB_API hgb_status hgb_n_from_ordp(char const *p, unsigned long t, char **out);

#ifdef __cplusplus
}
#endif

#endif
