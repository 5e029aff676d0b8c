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

#include "hgbern/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hgbern {

Integer factorial(unsigned n)
{
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer falling(Integer const &a, unsigned k)
{
  Integer out = 1;
  Integer term = a;
  for (unsigned i = 0; i < k; ++i)
  {
    out *= term;
    --term;
  }
  return out;
}

Integer rising(Integer const &a, unsigned k)
{
  Integer out = 1;
  Integer term = a;
  for (unsigned i = 0; i < k; ++i)
  {
    out *= term;
    ++term;
  }
  return out;
}

Integer binom(Integer const &a, unsigned k)
{
  Integer out;
  // mpz_bin_ui implements the falling-factorial definition for negative a too
  mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), k);
  return out;
}

Integer multinomial(std::span<unsigned const> parts)
{
  Integer out = 1;
  unsigned running = 0;
  for (unsigned part : parts)
  {
    running += part;
    out *= binom(Integer(running), part);
  }
  return out;
}

Integer stirling1_unsigned(unsigned n, unsigned k)
{
  if (k > n)
  {
    return 0;
  }
  // row[j] = s(i, j)
  std::vector<Integer> row(n + 1, Integer(0));
  row[0] = 1;
  for (unsigned i = 0; i < n; ++i)
  {
    for (unsigned j = i + 1; j > 0; --j)
    {
      row[j] = row[j - 1] + Integer(i) * row[j];
    }
    row[0] = Integer(i) * row[0];
  }
  return row[k];
}

Integer composition_count(CompositionSpec const &spec)
{
  if (spec.parts == 0)
  {
    return spec.total == 0 ? 1 : 0;
  }
  if (spec.min_part == 0)
  {
    return binom(Integer(spec.total + spec.parts - 1), spec.parts - 1);
  }
  if (spec.total < spec.parts * spec.min_part)
  {
    return 0;
  }
  // shift each part down by min_part
  Integer const free = spec.total - spec.parts * spec.min_part;
  return binom(free + spec.parts - 1, spec.parts - 1);
}

namespace {

void compose(std::vector<unsigned> &buffer, std::size_t slot, unsigned remaining, unsigned min_part,
             CompositionVisitor const &visit)
{
  std::size_t const parts = buffer.size();
  if (slot + 1 == parts)
  {
    buffer[slot] = remaining;
    visit(buffer);
    return;
  }
  std::size_t const later = parts - slot - 1;
  if (remaining < later * min_part)
  {
    return;
  }
  unsigned const upper = remaining - static_cast<unsigned>(later * min_part);
  for (unsigned value = min_part; value <= upper; ++value)
  {
    buffer[slot] = value;
    compose(buffer, slot + 1, remaining - value, min_part, visit);
  }
}

void partition_step(PartitionVector &current, unsigned remaining, unsigned max_part,
                    PartitionVisitor const &visit)
{
  if (remaining == 0)
  {
    visit(current);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part)
  {
    ++current.multiplicity[part - 1];
    partition_step(current, remaining - part, part, visit);
    --current.multiplicity[part - 1];
  }
}

}  // namespace

void enumerate_compositions(CompositionSpec const &spec, CompositionVisitor const &visit)
{
  if (spec.min_part > 1)
  {
    throw std::invalid_argument("composition minimum part must be 0 or 1");
  }
  if (spec.parts == 0)
  {
    throw std::invalid_argument("composition needs at least one part");
  }
  if (spec.total < spec.parts * spec.min_part)
  {
    return;
  }
  std::vector<unsigned> buffer(spec.parts, 0);
  compose(buffer, 0, spec.total, spec.min_part, visit);
}

std::vector<std::vector<unsigned>> compositions(CompositionSpec const &spec)
{
  std::vector<std::vector<unsigned>> out;
  enumerate_compositions(spec, [&](std::span<unsigned const> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

unsigned PartitionVector::weight() const
{
  unsigned total = 0;
  for (std::size_t i = 0; i < multiplicity.size(); ++i)
  {
    total += static_cast<unsigned>(i + 1) * multiplicity[i];
  }
  return total;
}

unsigned PartitionVector::length() const
{
  return std::accumulate(multiplicity.begin(), multiplicity.end(), 0U);
}

void enumerate_partition_vectors(unsigned m, PartitionVisitor const &visit)
{
  if (m == 0)
  {
    throw std::invalid_argument("partition vectors need m >= 1");
  }
  PartitionVector current{std::vector<unsigned>(m, 0)};
  partition_step(current, m, m, visit);
}

std::vector<PartitionVector> partition_vectors(unsigned m)
{
  std::vector<PartitionVector> out;
  enumerate_partition_vectors(m, [&](PartitionVector const &v) { out.push_back(v); });
  return out;
}

}  // namespace hgbern
