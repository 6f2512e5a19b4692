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

#include <random>

#include "puiseux/checks.hpp"
#include "puiseux/errors.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace puiseux::testing;

TEST_SUITE("semiring") {

TEST_CASE("classification of the base") {
  CHECK(sr("3").kind() == SemiringClass::Trivial);
  CHECK(sr("1/2").kind() == SemiringClass::NonAtomic);
  CHECK(sr("2/3", gens({2, 3})).kind() == SemiringClass::AtomicBelowOne);
  CHECK(sr("5/2").kind() == SemiringClass::AtomicAboveOne);
  CHECK_THROWS_AS(sr("0"), Error);
  CHECK(sr("5/2").length_step() == 3);
}

TEST_CASE("atoms and pi") {
  CHECK(sr("2/3").atom(2) == q("4/9"));
  CHECK(sr("2/3", gapped_n()).atom(1) == q("262144/387420489"));
  CHECK_THROWS_AS(sr("1/2").atom(0), Error);
  CHECK(sr("4").atom(0) == q("1"));
  const auto s = sr("2/3", gapped_n());
  CHECK(s.pi({}) == q("0"));
  CHECK(s.pi({{1, 2}, {3, 4}}) == q("2") * q("2/3").pow(18) + q("4") * q("2/3").pow(25));
  CHECK(sr("5/2").pi({{1, 2}}) == q("5"));
}

TEST_CASE("rewrite") {
  CHECK(rewrite(sr("2/3"), {{0, 2}}, 0, Direction::Up) == Factorization{{1, 3}});
  CHECK(rewrite(sr("5/2"), {{1, 2}}, 0, Direction::Down) == Factorization{{0, 5}});
  const auto s = sr("2/3", gapped_n());
  CHECK(s.up_cost(0) == 262144u);
  CHECK(rewrite(s, {{0, 262144}}, 0, Direction::Up) == Factorization{{1, 387420489}});
  CHECK_THROWS_AS(rewrite(sr("2/3"), {{0, 1}}, 0, Direction::Up), Error);
}

TEST_CASE("extremal forms") {
  const auto up = sr("5/2");
  CHECK(extremal(up, {{0, 5}}, Extremum::Min) == Factorization{{1, 2}});
  CHECK(extremal(up, {{0, 5}}, Extremum::Max) == Factorization{{0, 5}});
  const auto down = sr("2/3");
  CHECK(extremal(down, {{1, 3}}, Extremum::Min) == Factorization{{0, 2}});
  CHECK_FALSE(extremal(down, {{1, 3}}, Extremum::Max).has_value());
  CHECK(extremal(down, {}, Extremum::Min) == Factorization{});
  CHECK(extremal(down, {}, Extremum::Max) == Factorization{});
  CHECK(is_extremal(down, {{0, 2}}, Extremum::Min));
  CHECK_FALSE(is_extremal(down, {{1, 3}}, Extremum::Min));
  CHECK(is_extremal(up, {{0, 5}}, Extremum::Max));
}

TEST_CASE("membership") {
  CHECK(member(sr("2/3"), q("0")) == Factorization{});
  CHECK_FALSE(member(sr("2/3"), q("1/3")).has_value());
  const auto s = sr("2/3", gapped_n());
  const Rational x = s.pi({{1, 2}, {3, 4}});
  const auto z = member(s, x);
  REQUIRE(z.has_value());
  CHECK(z->length() == 6);
  CHECK(s.pi(*z) == x);
  CHECK(divides(sr("5/2"), q("1"), q("5")));
  CHECK(divides(sr("5/2"), q("5/2"), q("5")));
  CHECK_FALSE(divides(sr("5/2"), q("1"), q("5/2")));
  // Composite denominator: 2 * 5/6 = 5/3 has denominator 3 which divides 6^1.
  CHECK(denominator_exponent(sr("5/6"), q("5/3")) == 1u);
}

TEST_CASE("factorization sets") {
  const auto five = factorizations(sr("5/2"), q("5"));
  CHECK(five.complete);
  CHECK(five.items == std::vector<Factorization>{{{0, 5}}, {{1, 2}}});
  EnumerationCaps caps;
  caps.exp_cap = 3;
  const auto two = factorizations(sr("2/3"), q("2"), caps);
  CHECK_FALSE(two.complete);
  CHECK(two.items == std::vector<Factorization>{
                         {{0, 2}}, {{1, 1}, {2, 1}, {3, 3}}, {{1, 1}, {2, 3}}, {{1, 3}}});
  const auto none = factorizations(sr("2/3"), q("1/3"));
  CHECK(none.items.empty());
  CHECK(none.complete);
}

TEST_CASE("properties over the pool") {
  for (const auto& inst : checks::default_pool()) {
    CAPTURE(inst.label);
    const auto& s = inst.semiring;
    CHECK(checks::check_rewrite_invariance(s, 300, 3).status == checks::Status::Pass);
    CHECK(checks::check_extremal_uniqueness(s, 30, 4).status == checks::Status::Pass);
  }
}

}
