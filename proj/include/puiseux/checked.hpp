// Copyright 2026 The Puiseux Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUISEUX_CHECKED_HPP
#define PUISEUX_CHECKED_HPP

#include <cstdint>
#include <optional>

#include "puiseux/errors.hpp"

namespace puiseux {

// Overflow-checked arithmetic on the 64-bit counts used for multiplicities
// and lengths.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "multiplicity overflow in addition");
  }
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "multiplicity overflow in multiplication");
  }
  return out;
}

/// base^exponent, or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> try_pow(std::uint64_t base, std::uint64_t exponent) {
  if (base <= 1) return exponent == 0 ? 1 : base;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) return std::nullopt;
  }
  return out;
}

}  // namespace puiseux

#endif  // PUISEUX_CHECKED_HPP
