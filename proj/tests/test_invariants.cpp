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
#include "puiseux/errors.hpp"
#include "puiseux/invariants.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace puiseux::testing;

namespace {

std::vector<Multiplicity> ls(std::initializer_list<Multiplicity> v) { return v; }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("length sets") {
  const auto s = sr("2/3", gapped_n());
  EnumerationCaps caps;
  caps.exp_cap = 40;
  caps.len_cap = 15;
  const auto found = length_set(s, s.pi({{1, 2}, {3, 4}}), caps);
  CHECK(found.lengths == ls({6, 7, 11, 12}));
  CHECK(found.complete);
  CHECK(length_set(sr("5/2"), q("5")).lengths == ls({2, 5}));
  CHECK(length_set(sr("5/2"), q("0")).lengths == ls({0}));
  CHECK_FALSE(length_set(sr("2/3"), q("1/3")).member);
}

TEST_CASE("aap decomposition") {
  const auto pure = aap_decompose(ls({2, 3, 4}), 1);
  CHECK(pure.y == 2);
  CHECK(pure.core_size == 3);
  CHECK(pure.head.empty());
  CHECK(pure.tail.empty());
  CHECK(pure.bound == 0);
  const auto mixed = aap_decompose(ls({6, 7, 11, 12}), 1);
  CHECK(mixed.bound == 5);
  CHECK(mixed.y == 6);
  CHECK(mixed.core() == std::vector<std::int64_t>{0, 1});
  CHECK(mixed.tail == std::vector<std::int64_t>{5, 6});
  CHECK(mixed.reassemble() == std::vector<std::int64_t>{6, 7, 11, 12});
  CHECK(aap_decompose(ls({0}), 1).bound == 0);
  CHECK_THROWS_AS(aap_decompose(ls({2, 3}), 3), Error);
}

TEST_CASE("distances") {
  CHECK(delta_of(ls({6, 7, 11, 12})) == std::set<Multiplicity>{1, 4});
  CHECK(delta_of(ls({2, 5})) == std::set<Multiplicity>{3});
  CHECK(delta_of(ls({0})).empty());
}

TEST_CASE("delta of the semiring") {
  const auto prime = delta_semiring(sr("2/3", punctured_n()), 8, 0);
  CHECK(prime.proven == std::set<Multiplicity>{1, 5});
  CHECK(prime.min_witness.attained);
  CHECK(prime.max_witness.attained);
  CHECK(prime.within_interval());
  CHECK(delta_semiring(sr("2/3"), 6, 10).proven == std::set<Multiplicity>{1});
  CHECK(delta_semiring(sr("5/2"), 6, 10).proven == std::set<Multiplicity>{3});
  CHECK(delta_semiring(sr("7"), 6, 10).proven.empty());
}

TEST_CASE("betti elements") {
  const auto cyc = betti_elements(sr("2/3"), 3);
  REQUIRE(cyc.size() == 3);
  for (std::uint64_t k = 0; k < 3; ++k) CHECK(cyc[k].element == q("2") * q("2/3").pow(k));
  CHECK(betti_elements(sr("2/3", punctured_n()), 1).front().element == q("4"));
  CHECK(betti_elements(sr("5/2"), 1).front().element == q("5"));
  CHECK(betti_elements(sr("5"), 3).empty());
}

TEST_CASE("r-classes") {
  const auto five = rclasses(sr("5/2"), q("5"));
  CHECK(five.classes.size() == 2);
  CHECK(rclasses(sr("5/2"), q("6")).classes.size() == 1);
  const auto atom = rclasses(sr("5/2"), q("25/4"));
  CHECK(atom.classes.size() == 1);
  CHECK(atom.classes.front().size() == 1);
  EnumerationCaps caps;
  caps.exp_cap = 6;
  caps.len_cap = 12;
  CHECK(rclasses(sr("2/3", punctured_n()), q("4"), caps).classes.size() == 2);
}

TEST_CASE("catenary") {
  const auto five = catenary_element(sr("5/2"), q("5"));
  CHECK(five.value == 5);
  CHECK(five.exact);
  EnumerationCaps caps;
  caps.exp_cap = 6;
  const auto two = catenary_element(sr("2/3"), q("2"), caps);
  CHECK(two.value == 3);
  CHECK_FALSE(two.exact);
  CHECK(catenary_element(sr("5/2"), q("5/2")).value == 0);
  CHECK(catenary_semiring(sr("2/3")) == 3);
  CHECK(catenary_semiring(sr("2/3", punctured_n())) == 9);
  CHECK(catenary_semiring(sr("7")) == 0);
  CHECK_THROWS_AS(catenary_semiring(sr("1/2")), Error);
}

TEST_CASE("unions") {
  CHECK(union_k(sr("4"), 3, 0).lengths == ls({3}));
  EnumerationCaps caps;
  caps.len_cap = 8;
  const auto cyc = union_k(sr("2/3"), 2, 4, caps);
  REQUIRE(cyc.lengths.size() >= 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(cyc.lengths[i] == 2 + i);
  CHECK(cyc.claimed_difference == 1);
  const auto up = union_k(sr("5/2"), 5, 3);
  CHECK(std::find(up.lengths.begin(), up.lengths.end(), 2u) != up.lengths.end());
  CHECK(std::find(up.lengths.begin(), up.lengths.end(), 5u) != up.lengths.end());
  CHECK(up.claimed_difference == 3);
}

TEST_CASE("elasticity") {
  CHECK(elasticity(sr("3")) == Rational(1));
  CHECK_FALSE(elasticity(sr("5/2")).has_value());
  CHECK(elasticity(sr("5/2"), q("5")) == q("5/2"));
  CHECK_THROWS_AS(elasticity(sr("5/2"), q("3/2")), Error);
}

TEST_CASE("omega") {
  const auto one = omega(sr("5/2"), 0, 4, 6);
  CHECK(one.status == OmegaStatus::Finite);
  CHECK(one.lower == 2);
  REQUIRE(one.upper.has_value());
  CHECK(*one.upper == 2);
  CHECK(omega_bound(sr("5/2")) == 2);
  // 1 is not prime: omega(1) != 1.
  CHECK(one.lower != 1);
  CHECK(omega(sr("5/2"), 1, 4, 6).lower == 5);
  CHECK(omega(sr("2/3"), 0, 4, 6).status == OmegaStatus::Infinite);
  CHECK(omega(sr("2/3", gapped_n()), 2, 4, 6).status == OmegaStatus::Infinite);
}

TEST_CASE("classification flags") {
  const auto up = classify(sr("5/2"));
  CHECK(up.atomic);
  CHECK(up.accp);
  CHECK_FALSE(up.locally_tame);
  CHECK(up.accp_presentable);
  CHECK_FALSE(classify(sr("2/3")).accp);
  const auto triv = classify(sr("7"));
  CHECK(triv.atomic);
  CHECK(triv.accp);
  CHECK(triv.locally_tame);
  CHECK(triv.globally_tame);
  CHECK_FALSE(classify(sr("1/2")).atomic);
}

TEST_CASE("pool checks") {
  for (const auto& inst : checks::default_pool()) {
    CAPTURE(inst.label);
    for (const auto& o : checks::verify_instance(inst.semiring, 5)) {
      CAPTURE(o.claim);
      CAPTURE(o.detail);
      CHECK(o.status != checks::Status::Fail);
    }
  }
}

}
