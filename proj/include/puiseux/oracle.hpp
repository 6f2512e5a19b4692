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

#ifndef PUISEUX_ORACLE_HPP
#define PUISEUX_ORACLE_HPP

// Brute-force ground truth for small instances. Nothing here uses the
// rewriting identity or the extremal-form decoder; representations are found
// by clearing denominators and searching a bounded integer knapsack.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/semiring.hpp"

namespace puiseux::oracle {

/// x = sum c_i r^{s_i} scaled by d^S, S the largest exponent in the window:
/// weights[i] = n^{s_i} d^{S - s_i}, target = x d^S.
struct KnapsackInstance {
  BigInt target;
  std::vector<AtomIndex> window;
  std::vector<BigInt> weights;
  std::vector<std::optional<Multiplicity>> bounds;  // inclusive caps, nullopt = value bound only
  bool integral = true;  // false when x d^S is not an integer (no solutions)
};

KnapsackInstance integerize(const Semiring& s, const Rational& x, std::span<const AtomIndex> window,
                            std::span<const std::optional<Multiplicity>> bounds);

struct Representations {
  std::vector<Factorization> items;  // canonical order
  bool partial = false;              // node budget ran out
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All coefficient vectors over \p window within \p bounds (empty span = no
/// caps beyond the value bound) whose value is exactly x.
Representations representations(const Semiring& s, const Rational& x,
                                 std::span<const AtomIndex> window,
                                 std::span<const std::optional<Multiplicity>> bounds = {},
                                 std::uint64_t budget = kDefaultBudget);

/// Indices 0..k where k is the last atom not exceeding x (r > 1 only), i.e.
/// every atom that can occur in a factorization of x.
std::vector<AtomIndex> value_window(const Semiring& s, const Rational& x);

/// Indices 0..k with s_k <= max_exponent.
std::vector<AtomIndex> exponent_window(const Semiring& s, std::uint64_t max_exponent);

/// Caps c_i <= d^{delta_{i-1}} - 1 for i >= 1, none at index 0.
std::vector<std::optional<Multiplicity>> down_free_bounds(const Semiring& s,
                                                          std::span<const AtomIndex> window);

/// Membership by exhaustive search: window of exponents <= max(t, F+1) + slack,
/// down-free caps. Returns nullopt when the budget ran out.
std::optional<bool> is_member(const Semiring& s, const Rational& x, std::uint64_t slack = 0,
                              std::uint64_t budget = kDefaultBudget);

/// Every multiset z of atoms with indices <= exp_cap and 1 <= |z| <= size_cap
/// such that the atom at \p atom_index divides pi(z) but divides no pi(z - a)
/// for an atom a of z.
Representations minimal_bouquets(const Semiring& s, AtomIndex atom_index, Multiplicity size_cap,
                                 AtomIndex exp_cap, std::uint64_t budget = kDefaultBudget);

}  // namespace puiseux::oracle

#endif  // PUISEUX_ORACLE_HPP
