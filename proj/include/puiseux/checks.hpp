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

#ifndef PUISEUX_CHECKS_HPP
#define PUISEUX_CHECKS_HPP

// Property checks behind `puiseux verify` and the acceptance gate. Each check
// returns one outcome; budget exhaustion yields Skipped rather than Fail.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "puiseux/invariants.hpp"

namespace puiseux::checks {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status status);

struct Outcome {
  std::string claim;
  Status status = Status::Pass;
  std::string detail;
};

struct Instance {
  std::string label;
  Semiring semiring;
};

/// (2/3, N), (5/2, N), (2/3, {0} U [2,inf)), (2/3, {0,18,19,25,27} U [36,inf)),
/// (3/5, <2,3>), (7/3, <3,4,5>).
std::vector<Instance> default_pool();

/// `R@NSPEC`, e.g. `5/2@gens:1`.
Instance parse_instance(const std::string& text);

/// Coefficients 1..max_count on 1..max_terms indices drawn from 0..max_index.
Factorization random_factorization(std::mt19937_64& rng, AtomIndex max_index,
                                   Multiplicity max_count, int max_terms);

/// Caps that keep r < 1 enumeration at desk scale.
EnumerationCaps desk_caps(const Semiring& s);

Outcome check_rewrite_invariance(const Semiring& s, std::uint64_t trials, std::uint64_t seed);
Outcome check_extremal_uniqueness(const Semiring& s, std::uint64_t trials, std::uint64_t seed);
Outcome check_length_congruence(const Semiring& s, std::uint64_t trials, std::uint64_t seed);
/// r > 1: complete length sets decompose with difference |n - d|. The detail
/// lists the distinct per-element bounds; \p uniform_b reports whether they
/// all coincide.
Outcome check_aap(const Semiring& s, std::uint64_t trials, std::uint64_t seed,
                  bool* uniform_b = nullptr);
Outcome check_oracle_factorizations(const Semiring& s, std::uint64_t trials, std::uint64_t seed);
Outcome check_oracle_membership(const Semiring& s, std::uint64_t trials, std::uint64_t seed);
/// r > 1: every member x <= value_cap has more than one R-class exactly when
/// it is a Betti element.
Outcome check_betti_characterization(const Semiring& s, const Rational& value_cap);
Outcome check_betti_two_classes(const Semiring& s, std::uint64_t count);
Outcome check_catenary(const Semiring& s, std::uint64_t betti_count);
Outcome check_delta_sandwich(const Semiring& s, std::uint64_t index_cap, std::uint64_t samples);
Outcome check_omega(const Semiring& s);
/// U_k for k <= max_k: no gap other than |n - d| below the stable bound,
/// the length up to which the window agrees with a wider one.
Outcome check_unions(const Semiring& s, Multiplicity max_k, AtomIndex atom_index_cap);
Outcome check_unique_chains(const Semiring& s, std::uint64_t max_n);
Outcome check_classification(const Semiring& s);

/// Every check above at desk scale.
std::vector<Outcome> verify_instance(const Semiring& s, std::uint64_t seed = 1);

}  // namespace puiseux::checks

#endif  // PUISEUX_CHECKS_HPP
