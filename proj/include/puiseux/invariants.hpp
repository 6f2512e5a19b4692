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

#ifndef PUISEUX_INVARIANTS_HPP
#define PUISEUX_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/semiring.hpp"

namespace puiseux {

// ---------------------------------------------------------------------------
// Sets of lengths

struct LengthSet {
  std::vector<Multiplicity> lengths;  // increasing
  bool member = true;                 // false: x not in S, lengths empty
  bool complete = true;
  AtomIndex exp_cap = 0;
  std::optional<Multiplicity> len_cap;
  /// Every length of x up to this value is present.
  std::optional<Multiplicity> exact_through;

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

LengthSet length_set(const Semiring& s, const Rational& x, const EnumerationCaps& caps = {});

/// Caps under which the lengths of x are exact up to min L(x) + \p extra (or
/// base.len_cap, whichever is smaller) for r < 1, shrinking base.exp_cap to
/// the smallest sufficient value. Returns base unchanged for r > 1.
EnumerationCaps length_window_caps(const Semiring& s, const Rational& x, Multiplicity extra,
                                   const EnumerationCaps& base);

/// Lengths of x up to min(min L(x) + extra, caps.len_cap), found by a
/// length-capped rewrite closure (both directions of r). Unlike length_set
/// this stays small for r > 1 elements with huge maximum length.
LengthSet length_window(const Semiring& s, const Rational& x, Multiplicity extra,
                        const EnumerationCaps& caps = {});

/// L = y + (head U core U tail), core = {0, d, ..., (core_size-1) d},
/// head in [-bound, -1], tail in max(core) + [1, bound].
struct AapStructure {
  std::int64_t y = 0;
  std::uint64_t d = 1;
  std::uint64_t core_size = 1;
  std::vector<std::int64_t> head;
  std::vector<std::int64_t> tail;
  std::uint64_t bound = 0;

  std::vector<std::int64_t> core() const;
  /// y + (head U core U tail), increasing.
  std::vector<std::int64_t> reassemble() const;

  friend bool operator==(const AapStructure&, const AapStructure&) = default;
};

/// The decomposition with the smallest bound; ties go to the larger core, then
/// the smaller y. Throws MixedResidues when the lengths are not all congruent
/// modulo d.
AapStructure aap_decompose(std::span<const Multiplicity> lengths, std::uint64_t d);

/// Successive differences of an increasing length list.
std::set<Multiplicity> delta_of(std::span<const Multiplicity> lengths);

/// Successive differences whose upper end is at most \p exact_through, i.e.
/// the distances certainly present in the full set of lengths.
std::set<Multiplicity> proven_delta(const LengthSet& lengths);

// ---------------------------------------------------------------------------
// Betti elements, R-classes, catenary degree

struct BettiElement {
  AtomIndex index = 0;
  BigInt multiplicity;  // n^{delta_k}
  Rational element;     // n^{delta_k} r^{s_k}

  friend bool operator==(const BettiElement&, const BettiElement&) = default;
};

std::vector<BettiElement> betti_elements(const Semiring& s, std::uint64_t count);

struct RClassPartition {
  std::vector<std::vector<Factorization>> classes;  // each canonical, ordered by first member
  bool complete = true;

  friend bool operator==(const RClassPartition&, const RClassPartition&) = default;
};

/// Connected components of the factorizations of x under "shares an atom".
RClassPartition rclasses(const Semiring& s, const Rational& x, const EnumerationCaps& caps = {});
RClassPartition rclasses(std::span<const Factorization> items, bool complete);

struct CatenaryResult {
  Multiplicity value = 0;
  bool exact = true;

  friend bool operator==(const CatenaryResult&, const CatenaryResult&) = default;
};

/// Smallest n such that the factorizations of x are connected by chains with
/// every step at distance <= n (bottleneck of a minimum spanning tree).
CatenaryResult catenary_element(const Semiring& s, const Rational& x,
                                const EnumerationCaps& caps = {});
Multiplicity catenary_of(std::span<const Factorization> items);

/// 0 for r a positive integer, max(n, d)^{delta_0} otherwise.
BigInt catenary_semiring(const Semiring& s);

// ---------------------------------------------------------------------------
// Sets of distances

struct DistanceWitness {
  Rational element;
  BigInt distance;                 // the distance it should exhibit
  std::set<Multiplicity> found;    // proven distances of the element
  bool attained = false;

  friend bool operator==(const DistanceWitness&, const DistanceWitness&) = default;
};

struct DeltaReport {
  std::set<Multiplicity> proven;      // distances exhibited by examined elements
  std::set<BigInt> lower_family;      // |n^{delta_k} - d^{delta_k}|, k <= index_cap
  BigInt interval_low;                // |n - d|
  BigInt interval_high;               // |n^{delta_0} - d^{delta_0}|
  DistanceWitness min_witness;        // n r^{F(N)+1}
  DistanceWitness max_witness;        // n^{delta_0} r^{s_0}
  std::uint64_t elements_examined = 0;
  std::uint64_t incomplete_elements = 0;

  bool within_interval() const;
  bool lower_family_proven() const;

  friend bool operator==(const DeltaReport&, const DeltaReport&) = default;
};

/// Distances over the Betti elements with index <= index_cap plus
/// \p samples pseudo-random elements. Each element is examined on lengths up
/// to min L(x) + min(3 interval_high, caps.len_cap), so here len_cap is a
/// window width rather than an absolute length. Trivial semirings give an
/// empty report.
DeltaReport delta_semiring(const Semiring& s, std::uint64_t index_cap, std::uint64_t samples,
                           const EnumerationCaps& caps = {}, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Unions of sets of lengths

struct UnionWindow {
  std::vector<Multiplicity> lengths;   // increasing
  BigInt claimed_difference;           // |n - d|, 0 for the trivial class
  std::uint64_t elements = 0;          // sums of k atoms examined
  /// Lengths up to this value are exact for every examined element.
  std::optional<Multiplicity> exact_through;

  friend bool operator==(const UnionWindow&, const UnionWindow&) = default;
};

/// Union of L(x) over x = sum of k atoms with indices <= atom_index_cap.
UnionWindow union_k(const Semiring& s, Multiplicity k, AtomIndex atom_index_cap,
                    const EnumerationCaps& caps = {});

// ---------------------------------------------------------------------------
// Elasticity

/// nullopt means unbounded.
using Elasticity = std::optional<Rational>;

/// Without x: 1 for r a positive integer, unbounded otherwise. With x: the
/// ratio of the maximum to the minimum length (unbounded when lengths of x are
/// unbounded). Throws NotMember when x is not in S.
Elasticity elasticity(const Semiring& s, const std::optional<Rational>& x = std::nullopt);

// ---------------------------------------------------------------------------
// Omega primality

enum class OmegaStatus { Finite, Infinite, BoundedEstimate };

std::string_view to_string(OmegaStatus status);

struct OmegaResult {
  OmegaStatus status = OmegaStatus::BoundedEstimate;
  Multiplicity lower = 0;            // largest minimal bouquet found
  std::optional<BigInt> upper;       // K, only for the atom r^{F(N)+1}
  AtomIndex exp_cap = 0;
  Multiplicity size_cap = 0;
  std::vector<Factorization> witnesses;  // minimal bouquets of size == lower
  bool budget_exhausted = false;

  friend bool operator==(const OmegaResult&, const OmegaResult&) = default;
};

OmegaResult omega(const Semiring& s, AtomIndex atom_index, AtomIndex exp_cap,
                  Multiplicity size_cap, std::uint64_t budget = 10'000'000);

/// K = max(d, sum_{i<m} n^{s_m - s_i}) for s_m = F(N) + 1.
BigInt omega_bound(const Semiring& s);

// ---------------------------------------------------------------------------
// Classification

struct Classification {
  bool atomic = false;
  bool accp = false;
  bool ffm_known = false;
  bool locally_tame = false;
  bool globally_tame = false;
  bool accp_presentable = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Semiring& s);

}  // namespace puiseux

#endif  // PUISEUX_INVARIANTS_HPP
