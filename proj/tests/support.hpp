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

#ifndef PUISEUX_TESTS_SUPPORT_HPP
#define PUISEUX_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "puiseux/numonoid.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/semiring.hpp"

namespace puiseux::testing {

inline Rational q(std::string_view text) { return Rational::parse(text); }

inline NumericalMonoid gens(std::vector<std::uint64_t> g) {
  return NumericalMonoid::from_generators(g);
}

inline NumericalMonoid small(std::vector<std::uint64_t> e, std::uint64_t cond) {
  return NumericalMonoid::from_small_elements(e, cond);
}

// N = {0,18,19,25,27} U [36, inf) and N' = {0} U [2, inf).
inline NumericalMonoid gapped_n() { return small({0, 18, 19, 25, 27}, 36); }
inline NumericalMonoid punctured_n() { return small({0}, 2); }

inline Semiring sr(std::string_view r, const NumericalMonoid& m = NumericalMonoid::naturals()) {
  return Semiring(q(r), m);
}

}  // namespace puiseux::testing

#endif  // PUISEUX_TESTS_SUPPORT_HPP
