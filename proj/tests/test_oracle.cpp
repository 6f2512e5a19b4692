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

#include "puiseux/checks.hpp"
#include "puiseux/oracle.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace puiseux::testing;

TEST_SUITE("oracle") {

TEST_CASE("integerize") {
  const std::vector<AtomIndex> window{0, 1, 2};
  const auto k = oracle::integerize(sr("5/2"), q("5"), window, {});
  CHECK(k.target == 20);
  CHECK(k.weights == std::vector<BigInt>{4, 10, 25});
  CHECK(k.integral);
}

TEST_CASE("representations") {
  const std::vector<AtomIndex> window{0, 1, 2};
  const auto five = oracle::representations(sr("5/2"), q("5"), window);
  CHECK(five.items == std::vector<Factorization>{{{0, 5}}, {{1, 2}}});
  const std::vector<AtomIndex> low{0, 1};
  const auto s = sr("2/3");
  CHECK(oracle::representations(s, q("1/3"), low, oracle::down_free_bounds(s, low)).items.empty());
  CHECK(oracle::representations(s, q("0"), low).items == std::vector<Factorization>{{}});
  CHECK(oracle::value_window(sr("5/2"), q("5")) == std::vector<AtomIndex>{0, 1});
}

TEST_CASE("membership") {
  CHECK(oracle::is_member(sr("2/3"), q("1/3")) == false);
  CHECK(oracle::is_member(sr("2/3"), q("2")) == true);
  CHECK(oracle::is_member(sr("5/2"), q("3/2")) == false);
}

TEST_CASE("minimal bouquets") {
  const auto one = oracle::minimal_bouquets(sr("5/2"), 0, 3, 3);
  CHECK(std::find(one.items.begin(), one.items.end(), Factorization{{0, 1}}) != one.items.end());
  CHECK(std::find(one.items.begin(), one.items.end(), Factorization{{1, 2}}) != one.items.end());
  std::uint64_t largest = 0;
  for (const auto& z : one.items) largest = std::max(largest, z.length());
  CHECK(largest == 2);
  const auto half = oracle::minimal_bouquets(sr("5/2"), 1, 5, 3);
  CHECK(std::find(half.items.begin(), half.items.end(), Factorization{{0, 5}}) != half.items.end());
  CHECK(std::find(half.items.begin(), half.items.end(), Factorization{{1, 1}}) != half.items.end());
}

TEST_CASE("agreement with the decoder") {
  for (const auto& inst : checks::default_pool()) {
    CAPTURE(inst.label);
    CHECK(checks::check_oracle_membership(inst.semiring, 60, 11).status != checks::Status::Fail);
    CHECK(checks::check_oracle_factorizations(inst.semiring, 20, 12).status !=
          checks::Status::Fail);
  }
}

}
