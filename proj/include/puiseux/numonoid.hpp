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

#ifndef PUISEUX_NUMONOID_HPP
#define PUISEUX_NUMONOID_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace puiseux {

/// A numerical monoid N: a cofinite additive submonoid of the naturals.
///
/// Elements are indexed from zero, so element(0) == 0 and element(n) is the
/// (n+1)-th smallest member. Membership below the conductor is a precomputed
/// table; everything at or above the conductor is a member. frobenius() == -1
/// encodes N equal to all naturals, in which case the conductor is 0.
class NumericalMonoid {
 public:
  /// The monoid generated by \p gens. Throws NotCofinite when gcd(gens) != 1.
  static NumericalMonoid from_generators(std::span<const std::uint64_t> gens);

  /// The monoid {elements} U [conductor, inf). The elements must contain 0,
  /// lie below the conductor, and be closed under addition below the
  /// conductor (NotAMonoid / NotClosed otherwise). The stored conductor is the
  /// true one (largest gap + 1), which may be smaller than the argument.
  static NumericalMonoid from_small_elements(std::span<const std::uint64_t> elements,
                                             std::uint64_t conductor);

  /// The full monoid of naturals.
  static NumericalMonoid naturals();

  const std::vector<std::uint64_t>& min_generators() const { return min_generators_; }
  std::int64_t frobenius() const { return static_cast<std::int64_t>(conductor_) - 1; }
  std::uint64_t conductor() const { return conductor_; }
  std::uint64_t multiplicity() const { return min_generators_.front(); }

  /// All members up to and including the conductor.
  std::vector<std::uint64_t> small_elements() const;

  bool contains(std::uint64_t k) const;
  bool is_naturals() const { return conductor_ == 0; }

  /// s_n.
  std::uint64_t element(std::uint64_t n) const;
  /// delta_n = s_{n+1} - s_n.
  std::uint64_t gap(std::uint64_t n) const { return element(n + 1) - element(n); }
  /// n with s_n == value, when value is a member.
  std::optional<std::uint64_t> index_of(std::uint64_t value) const;
  /// The index m with s_m == conductor.
  std::uint64_t conductor_index() const { return below_.size(); }

  /// `gens:a,b,...` rendering of the minimal generating set.
  std::string to_string() const;

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.conductor_ == b.conductor_ && a.below_ == b.below_;
  }

 private:
  NumericalMonoid(std::vector<std::uint64_t> below, std::uint64_t conductor);

  std::vector<std::uint64_t> below_;  // members strictly below the conductor
  std::vector<bool> table_;           // membership for [0, conductor)
  std::uint64_t conductor_ = 0;
  std::vector<std::uint64_t> min_generators_;
};

}  // namespace puiseux

#endif  // PUISEUX_NUMONOID_HPP
