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

#include "hgbern/rational.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hgbern {

Integer factorial(unsigned n);

/// a(a-1)...(a-k+1); 1 when k == 0.
Integer falling(Integer const &a, unsigned k);

/// a(a+1)...(a+k-1); 1 when k == 0.
Integer rising(Integer const &a, unsigned k);

/// falling(a, k) / k! for any integer a. Gives binom(n, k) = 0 for
/// 0 <= n < k and binom(-1, 0) = 1.
Integer binom(Integer const &a, unsigned k);

/// (sum parts)! / prod(parts_i!)
Integer multinomial(std::span<unsigned const> parts);

/// Unsigned Stirling numbers of the first kind, via
/// s(n+1, k) = s(n, k-1) + n s(n, k), s(0, 0) = 1.
Integer stirling1_unsigned(unsigned n, unsigned k);

/// Ordered tuples of `parts` integers, each >= min_part, summing to `total`.
struct CompositionSpec
{
  unsigned total    = 0;
  unsigned parts    = 1;
  unsigned min_part = 0;  // 0 or 1
};

/// Closed-form count: C(n-1, k-1) for positive parts, C(n+k-1, k-1) for
/// nonnegative parts.
Integer composition_count(CompositionSpec const &spec);

using CompositionVisitor = std::function<void(std::span<unsigned const>)>;

/// Visits every composition in ascending lexicographic order.
void enumerate_compositions(CompositionSpec const &spec, CompositionVisitor const &visit);

std::vector<std::vector<unsigned>> compositions(CompositionSpec const &spec);

/// Multiplicity form of a partition of m: multiplicity[i-1] = t_i, the number
/// of parts equal to i, so that sum i * t_i = m.
struct PartitionVector
{
  std::vector<unsigned> multiplicity;

  unsigned weight() const;  // sum i * t_i
  unsigned length() const;  // sum t_i

  friend bool operator==(PartitionVector const &, PartitionVector const &) = default;
};

using PartitionVisitor = std::function<void(PartitionVector const &)>;

/// Visits all p(m) partition vectors of m (m >= 1). Each vector has exactly m
/// entries.
void enumerate_partition_vectors(unsigned m, PartitionVisitor const &visit);

std::vector<PartitionVector> partition_vectors(unsigned m);

}  // namespace hgbern
