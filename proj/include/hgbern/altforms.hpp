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

// Closed-form routes to B_{N,n} and B_{N,n}^{(r)} that do not go through the
// defining recurrence: composition sums, partition (Trudi) sums, the descent
// relations between consecutive N, and the multinomial convolution.
//
// All functions require n >= 1 (PreconditionError otherwise); the n = 0 value
// is 1 and is handled by the caller. Composition-sum routes are exponential
// in n and are meant for n up to about 16.

#include "hgbern/hbnum.hpp"
#include "hgbern/rational.hpp"

#include <vector>

namespace hgbern {

/// M_r(e) for e = 0..max.
struct MrTable
{
  unsigned N = 1;
  unsigned r = 1;
  std::vector<Rational> values;

  Rational const &operator()(unsigned e) const
  {
    return values.at(e);
  }
};

/// M_r(e) = sum_{i_1+..+i_r = e, i_j >= 0} (N!)^r / prod (N+i_j)!
Rational mr(unsigned N, unsigned r, unsigned e);

MrTable mr_table(unsigned N, unsigned r, unsigned max_e);

/// n! sum_k sum_{i_1+..+i_k = n, i_j >= 1} (-N!)^k / prod (N+i_j)!
Rational hb_explicit_comp(unsigned N, unsigned n);

/// n! sum_k C(n+1, k+1) sum_{i_1+..+i_k = n, i_j >= 0} (-N!)^k / prod (N+i_j)!
Rational hb_explicit_binom(unsigned N, unsigned n);

/// sum_k (-1)^k sum_{i_1+..+i_k = n, i_j >= 1} multinomial(n; i) prod B_{N,i_j},
/// which equals 1 / C(N+n, N).
Rational reciprocal_binom_inverse(unsigned N, unsigned n, MemoStore &store = default_store());

/// n! sum_k (-1)^k sum_{e_1+..+e_k = n, e_j >= 1} M_r(e_1)...M_r(e_k)
Rational hb_higher_explicit(unsigned N, unsigned r, unsigned n);

/// sum_{n_1+..+n_r = n} multinomial(n; n_1..n_r) prod B_{N,n_i}.
/// Defined for n >= 0.
Rational hb_higher_convolution(unsigned N, unsigned r, unsigned n, MemoStore &store = default_store());

/// One-step descent
///   B_{N,n} = N/(N+n) { B_{N-1,n} + sum_{m=1}^{n-1} C(n, n-m+1) B_{N,m} B_{N-1,n-m+1} }
/// with the B_{N,m} (m < n) produced by the same relation. Requires N >= 2.
Rational hb_descent_step(unsigned N, unsigned n, MemoStore &store = default_store());

/// Nested descent: sum over chains n = i_0 > i_1 > ... > i_m >= 1 using
/// only B_{N-1, .} values. Requires N >= 2.
Rational hb_descent_nested(unsigned N, unsigned n, MemoStore &store = default_store());

/// n! sum_{sum i t_i = n} multinomial(t) (-1)^{sum t} prod M_r(i)^{t_i}
Rational hb_trudi(unsigned N, unsigned r, unsigned n);

/// M_r(n) recovered as the Toeplitz-Hessenberg determinant with unit
/// superdiagonal and entries (-1)^k B_{N,k}^{(r)} / k!.
Rational recover_mr_det(unsigned N, unsigned r, unsigned n, MemoStore &store = default_store());

}  // namespace hgbern
