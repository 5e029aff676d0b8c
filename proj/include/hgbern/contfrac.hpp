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

// Convergents P_n/Q_n of the continued fraction
//
//   1/1F1(1; N+1; x) = 1 - x/(N+1 + x/(N+2 - (N+1)x/(N+3 + 2x/(N+4 - ...))))
//
// and the coefficient identities that follow from Q_n * sum B_{N,k} x^k/k!
// agreeing with P_n through x^n.

#include "hgbern/hbnum.hpp"
#include "hgbern/poly.hpp"
#include "hgbern/series.hpp"

#include <string_view>
#include <vector>

namespace hgbern {

struct ConvergentPair
{
  unsigned N = 1;
  unsigned n = 0;
  Poly P;
  Poly Q;

  friend bool operator==(ConvergentPair const &, ConvergentPair const &) = default;
};

/// a_n(x) = N + n for n >= 1.
Poly partial_denominator(unsigned N, unsigned n);

/// b_{2k}(x) = k x, b_{2k+1}(x) = -(N+k) x for the indices n >= 2 used by
/// the recurrence.
Poly partial_numerator(unsigned N, unsigned n);

/// P_n = a_n P_{n-1} + b_n P_{n-2} (same for Q) from P_0 = Q_0 = 1,
/// P_1 = (N+1) - x, Q_1 = N+1.
ConvergentPair convergent_rec(unsigned N, unsigned n);

/// All convergents 0..max_n from one pass of the recurrence.
std::vector<ConvergentPair> convergents_rec(unsigned N, unsigned max_n);

/// Closed-form P_n, Q_n.
ConvergentPair convergent_closed(unsigned N, unsigned n);

/// Q_n(x) * sum_k B_{N,k} x^k/k! - P_n(x), truncated to order n+1.
/// Every coefficient is zero when the pair is a genuine convergent.
Series approximation_defect(unsigned N, unsigned n, ConvergentPair const &pair,
                            MemoStore &store = default_store());

struct IdentitySides
{
  Rational lhs;
  Rational rhs;

  bool holds() const
  {
    return lhs == rhs;
  }
};

/// Coefficient of x^h in Q_{2n} * series - P_{2n}, split into the double sum
/// and the closed right side. Valid for n >= 1, 0 <= h <= 2n.
IdentitySides identity_even(unsigned N, unsigned n, unsigned h, MemoStore &store = default_store());

/// Same for Q_{2n-1}, P_{2n-1}. Valid for n >= 1, 0 <= h <= 2n-1.
IdentitySides identity_odd(unsigned N, unsigned n, unsigned h, MemoStore &store = default_store());

enum class ClassicalVariant
{
  even,
  odd,
  even_reduced,
  odd_reduced,
};

std::string_view variant_name(ClassicalVariant variant);

/// Largest h accepted for the variant: 2n, 2n-1, 2n+1 and 2n respectively.
unsigned classical_max_h(ClassicalVariant variant, unsigned n);

/// The N = 1 identities normalized by the factorial on the right side, in
/// the double-sum form (even, odd) or the single-sum reduced form.
IdentitySides classical_identity(ClassicalVariant variant, unsigned n, unsigned h,
                                 MemoStore &store = default_store());

/// prod_{l=lo}^{hi} (N + l); empty products are 1.
Integer shifted_product(Integer const &N, long lo, long hi);

}  // namespace hgbern
