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

// p-adic valuations of rationals and Kummer-type congruences for classical
// and hypergeometric Bernoulli numbers.
//
// A rational congruence a = b (mod p^k) means ord_p(a - b) >= k. For
// p-integral values this is the usual congruence on residues.

#include "hgbern/hbnum.hpp"
#include "hgbern/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hgbern {

/// Exponent of p in a rational; +infinity for zero.
class PadicVal
{
public:
  static PadicVal infinity()
  {
    return PadicVal();
  }
  static PadicVal finite(long value)
  {
    return PadicVal(value);
  }

  bool is_infinite() const
  {
    return !value_.has_value();
  }
  /// Precondition: finite.
  long value() const
  {
    return *value_;
  }
  std::string str() const;

  friend PadicVal operator+(PadicVal const &a, PadicVal const &b);
  friend bool operator==(PadicVal const &, PadicVal const &) = default;
  friend std::strong_ordering operator<=>(PadicVal const &a, PadicVal const &b);

private:
  PadicVal() = default;
  explicit PadicVal(long value)
    : value_(value)
  {}

  std::optional<long> value_;
};

/// Trial division up to 10^6, then a probabilistic test for larger inputs.
bool is_prime(Integer const &p);

/// Throws std::invalid_argument unless p is prime.
PadicVal ordp(Rational const &x, Integer const &p);
PadicVal ordp(Integer const &x, Integer const &p);

/// Canonical residue of x in [0, p^k) when the denominator is prime to p.
std::optional<Integer> residue(Rational const &x, Integer const &p, unsigned k);

struct CongruenceVerdict
{
  bool holds = false;
  Integer p;
  /// Required valuation of the difference; nullopt means exact equality.
  std::optional<unsigned long> modulus_exponent;
  PadicVal difference_ord = PadicVal::infinity();
  Rational lhs;
  Rational rhs;
  std::optional<Integer> lhs_residue;
  std::optional<Integer> rhs_residue;

  /// Unmet hypotheses, one human-readable line each. Empty when all hold.
  std::vector<std::string> violations;
  /// ord_p(N - 1) and the bound it was compared with, for the hypergeometric
  /// checks.
  std::optional<PadicVal> n_minus_one_ord;
  std::optional<unsigned long> required_ord;

  bool hypotheses_met() const
  {
    return violations.empty();
  }
};

/// ord_p(a - b) >= k, with residues mod p^k when both sides are p-integral.
/// Requires k >= 1.
CongruenceVerdict congruent(Rational const &a, Rational const &b, Integer const &p, unsigned long k);

/// (1 - p^{m-1}) B_m/m = (1 - p^{n-1}) B_n/n (mod p^{nu+1}) under
/// m, n positive even, m = n (mod (p-1)p^nu), m, n != 0 (mod p-1).
CongruenceVerdict kummer_classical(Integer const &p, unsigned m, unsigned n, unsigned nu,
                                   MemoStore &store = default_store());

/// prod_{k=0}^{n} (N+k)!/N! B_{N,n} = prod_{k=0}^{n} (1+k)! B_n (mod p^t),
/// t = ord_p(N-1). N = 1 requires exact equality.
CongruenceVerdict hb_factorial_congruence(Integer const &p, Integer const &N, unsigned n,
                                          MemoStore &store = default_store());

/// nu + 1 + ord_p(prod_{k=0}^{n} (1+k)!) + ord_p(n)
unsigned long ord_threshold_corollary(Integer const &p, unsigned n, unsigned nu);

/// nu + 1 + ord_p(prod_{k=0}^{m} (1+k)!) + max(ord_p m, ord_p n)
unsigned long ord_threshold_pair(Integer const &p, unsigned m, unsigned n, unsigned nu);

/// B_{N,n}/n = B_n/n (mod p^{nu+1}) when n != 0 (mod p-1) and ord_p(N-1)
/// meets ord_threshold_corollary.
CongruenceVerdict hb_kummer_corollary(Integer const &p, Integer const &N, unsigned n, unsigned nu,
                                      MemoStore &store = default_store());

/// (1 - p^{m-1}) B_{N,m}/m = (1 - p^{n-1}) B_{N,n}/n (mod p^{nu+1}) under the
/// classical hypotheses, m >= n, and ord_p(N-1) >= ord_threshold_pair.
CongruenceVerdict hb_kummer_pair(Integer const &p, Integer const &N, unsigned m, unsigned n, unsigned nu,
                                 MemoStore &store = default_store());

/// 1 + p^t, the smallest N > 1 with ord_p(N-1) = t.
Integer n_with_ord(Integer const &p, unsigned long t);

}  // namespace hgbern
