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

#include <stdexcept>
#include <string>

namespace hgbern {

// Invalid indices (N = 0, r = 0, ...) are reported with std::invalid_argument.

/// A formula was asked to evaluate outside the range where it is stated,
/// e.g. the descent relations at N = 1 or the explicit sums at n = 0.
class PreconditionError : public std::domain_error
{
public:
  explicit PreconditionError(std::string const &what)
    : std::domain_error(what)
  {}
};

/// Cache file could not be read, or its contents disagree with recomputation.
class CacheError : public std::runtime_error
{
public:
  explicit CacheError(std::string const &what)
    : std::runtime_error(what)
  {}
};

}  // namespace hgbern
