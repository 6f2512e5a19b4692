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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "puiseux/errors.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace puiseux::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("numonoid") {

TEST_CASE("generators") {
  CHECK(gens({1}).frobenius() == -1);
  CHECK(gens({1}).is_naturals());
  const auto m = gens({2, 3});
  CHECK(m.frobenius() == 1);
  CHECK(m.small_elements() == std::vector<std::uint64_t>{0, 2});
  CHECK(kind_of([] { gens({4, 6}); }) == ErrorKind::NotCofinite);
  // McNugget numbers
  CHECK(gens({6, 9, 20}).frobenius() == 43);
  CHECK(gens({3, 4, 5}).conductor() == 3);
}

TEST_CASE("small elements") {
  const auto n = gapped_n();
  CHECK(n.frobenius() == 35);
  CHECK(n.min_generators() ==
        std::vector<std::uint64_t>{18, 19, 25, 27, 39, 40, 41, 42, 47, 48, 49, 51, 53});
  CHECK(punctured_n().frobenius() == 1);
  CHECK(punctured_n().min_generators() == std::vector<std::uint64_t>{2, 3});
  CHECK(small({0, 3}, 5).frobenius() == 4);
  CHECK(small({0, 2}, 4).frobenius() == 3);  // that is <2,5>
  CHECK(kind_of([] { small({0, 2, 3}, 10); }) == ErrorKind::NotClosed);
  CHECK(kind_of([] { small({2, 3}, 10); }) == ErrorKind::NotAMonoid);
}

TEST_CASE("enumeration") {
  const auto n = gapped_n();
  CHECK(n.element(0) == 0);
  CHECK(n.element(1) == 18);
  CHECK(n.element(4) == 27);
  CHECK(n.element(5) == 36);
  CHECK(n.element(9) == 40);
  CHECK(n.conductor_index() == 5);
  CHECK(n.gap(0) == 18);
  CHECK(n.index_of(25) == 3);
  CHECK_FALSE(n.index_of(26).has_value());
  CHECK(NumericalMonoid::naturals().element(7) == 7);
}

TEST_CASE("generators and elements agree") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::uint64_t> g;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) g.push_back(2 + rng() % 11);
    std::uint64_t gg = 0;
    for (auto v : g) gg = std::gcd(gg, v);
    if (gg != 1) continue;
    const auto m = gens(g);
    auto below = m.small_elements();  // includes the conductor itself
    below.pop_back();
    const auto back = small(below, m.conductor());
    CHECK(back == m);
    for (std::uint64_t v = 0; v < m.conductor() + 5; ++v) {
      bool sieve = v == 0;
      for (std::uint64_t a : g) sieve = sieve || (v >= a && m.contains(v - a));
      CHECK(m.contains(v) == sieve);
    }
    for (std::uint64_t i = 0; i + 1 < 30; ++i) CHECK(m.element(i) < m.element(i + 1));
    CHECK(m.multiplicity() == *std::min_element(g.begin(), g.end()));
  }
}

}
