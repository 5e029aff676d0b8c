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

#include "hgbern/hbnum.hpp"
#include "hgbern/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgbern {

/**
 * m x m Toeplitz-Hessenberg matrix
 *
 *   | a_1  a_0                |
 *   | a_2  a_1  a_0           |
 *   |  :         .    .       |
 *   | a_m  ...  a_2  a_1      |
 *
 * constant along diagonals, a_0 on the superdiagonal and zero above it.
 * `entries` holds a_1..a_m.
 */
struct ToeplitzHessenbergSpec
{
  Rational a0 = 1;
  std::vector<Rational> entries;

  std::size_t dimension() const
  {
    return entries.size();
  }
};

using DenseMatrix = std::vector<std::vector<Rational>>;

DenseMatrix materialize(ToeplitzHessenbergSpec const &spec);

/// D_m via first-row expansion D_m = sum_{l=1}^{m} (-a0)^{l-1} a_l D_{m-l},
/// D_0 = 1.
Rational toeplitz_hessenberg_det(ToeplitzHessenbergSpec const &spec);

/// D_0..D_m, the determinants of all leading blocks.
std::vector<Rational> toeplitz_hessenberg_minors(ToeplitzHessenbergSpec const &spec);

/// Trudi's partition-sum form
///   sum_{t_1 + 2t_2 + .. + m t_m = m} multinomial(t) (-a0)^{m - sum t} prod a_i^{t_i}.
/// Requires m >= 1.
Rational trudi_expand(ToeplitzHessenbergSpec const &spec);

/// (-1)^n n! det[M_1(N) ...]; the r = 1 determinant expression.
Rational hb_det(unsigned N, unsigned n);

/// (-1)^n n! times the determinant with entries M_r(1..n).
Rational hb_higher_det(unsigned N, unsigned r, unsigned n);

/// Outcome of checking that (alpha, R) form an inversion pair.
struct InversionVerdict
{
  bool alpha_from_r   = true;  // alpha_k = det(R(1..k)) for every k
  bool r_from_alpha   = true;  // R(k) = det(alpha_1..alpha_k) for every k
  bool relation       = true;  // sum_k (-1)^{n-k} alpha_k R(n-k) = 0
  bool matrix_inverse = true;  // unit lower triangular product is the identity
  std::optional<std::size_t> first_bad_index;
  std::string failure;  // names the first direction that failed

  bool ok() const
  {
    return alpha_from_r && r_from_alpha && relation && matrix_inverse;
  }
};

/// Checks alpha_1..alpha_n against R(1)..R(n) with alpha_0 = R(0) = 1.
///
/// The matrix check multiplies the unit lower triangular Toeplitz matrix of
/// (1, alpha_1, .., alpha_n) by that of (1, -R(1), R(2), .., (-1)^n R(n))
/// and runs only for n <= matrix_limit.
InversionVerdict inversion_pair_check(std::span<Rational const> alphas, std::span<Rational const> rs,
                                      std::size_t matrix_limit = 12);

/// Unit lower triangular Toeplitz matrix with first column (1, c_1, .., c_n).
DenseMatrix unit_lower_toeplitz(std::span<Rational const> column);

DenseMatrix multiply(DenseMatrix const &a, DenseMatrix const &b);

}  // namespace hgbern
