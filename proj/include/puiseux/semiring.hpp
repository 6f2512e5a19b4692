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

#ifndef PUISEUX_SEMIRING_HPP
#define PUISEUX_SEMIRING_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/numonoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

enum class SemiringClass { Trivial, AtomicBelowOne, AtomicAboveOne, NonAtomic };

std::string_view to_string(SemiringClass kind);

enum class Direction { Up, Down };
enum class Extremum { Min, Max };

/// The exponential Puiseux semiring S_{r,N} generated by r^k, k in N.
///
/// For the atomic classes the atom at index k is r^{s_k}. The trivial class
/// (r a positive integer) is modelled as the naturals with the single atom 1
/// at index 0.
class Semiring {
 public:
  /// Throws InvalidArgument unless r > 0.
  Semiring(Rational r, NumericalMonoid monoid);

  const Rational& base() const { return r_; }
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  const NumericalMonoid& monoid() const { return monoid_; }
  SemiringClass kind() const { return kind_; }

  /// Trivial or one of the two nontrivial atomic classes.
  bool is_atomic() const { return kind_ != SemiringClass::NonAtomic; }
  bool is_nontrivial_atomic() const {
    return kind_ == SemiringClass::AtomicBelowOne || kind_ == SemiringClass::AtomicAboveOne;
  }
  bool below_one() const { return kind_ == SemiringClass::AtomicBelowOne; }

  /// |n(r) - d(r)|, the common difference of length sets.
  BigInt length_step() const;

  /// r^{s_k}. Throws NotAtomic for the non-atomic class and InvalidArgument for
  /// k > 0 in the trivial class.
  Rational atom(AtomIndex k) const;

  /// Sum of c_k r^{s_k}.
  Rational pi(const Factorization& z) const;

  /// n(r)^{delta_k}: copies of atom k consumed by an Up move at k, or nullopt
  /// when that count does not fit in a multiplicity.
  std::optional<Multiplicity> up_cost(AtomIndex k) const;
  /// d(r)^{delta_k}: copies of atom k+1 consumed by a Down move at k.
  std::optional<Multiplicity> down_cost(AtomIndex k) const;

  /// Throws NotAtomic unless the semiring is atomic (trivial included).
  void require_atomic() const;
  void require_nontrivial_atomic() const;

 private:
  Rational r_;
  BigInt num_;
  BigInt den_;
  NumericalMonoid monoid_;
  SemiringClass kind_;
  std::optional<std::uint64_t> num_small_;
  std::optional<std::uint64_t> den_small_;
};

/// Applies the identity n^{delta_k} r^{s_k} = d^{delta_k} r^{s_{k+1}} once at
/// index k, left to right (Up) or right to left (Down). Throws
/// InsufficientCoefficient when the needed copies are missing.
Factorization rewrite(const Semiring& s, Factorization z, AtomIndex k, Direction direction);

/// Pure coefficient test for minimum / maximum length.
bool is_extremal(const Semiring& s, const Factorization& z, Extremum which);

/// The unique minimum-length factorization of pi(z), or the unique maximum
/// length one. Max is nullopt for r < 1 when lengths of pi(z) are unbounded.
std::optional<Factorization> extremal(const Semiring& s, const Factorization& z, Extremum which);

/// Minimum-length factorization of x, or nullopt when x is not in S.
std::optional<Factorization> member(const Semiring& s, const Rational& x);

/// x | y in S: y - x is a member.
bool divides(const Semiring& s, const Rational& x, const Rational& y);

/// Least t with denominator(x) | d(r)^t, or nullopt when no such t exists.
std::optional<std::uint64_t> denominator_exponent(const Semiring& s, const Rational& x);

/// max(t, F(N) + 1): every atom in the extremal factorization of x that
/// satisfies the Down-free criterion has exponent at most this bound.
std::optional<std::uint64_t> exponent_bound(const Semiring& s, const Rational& x);

struct EnumerationCaps {
  AtomIndex exp_cap = 64;
  std::optional<Multiplicity> len_cap = 512;
  std::uint64_t budget = 10'000'000;

  friend bool operator==(const EnumerationCaps&, const EnumerationCaps&) = default;
};

struct FactorizationSet {
  std::vector<Factorization> items;  // canonical (lexicographic) order
  bool complete = true;
  AtomIndex exp_cap = 0;
  std::optional<Multiplicity> len_cap;
  bool cap_too_small = false;
  bool budget_exhausted = false;
  /// Every factorization of length <= this value is present in items.
  std::optional<Multiplicity> exact_through;

  friend bool operator==(const FactorizationSet&, const FactorizationSet&) = default;
};

/// Z(x). Exhaustive for r > 1 (caps ignored, budget honoured). For r < 1 the
/// result is every factorization with atom indices <= exp_cap and length <=
/// len_cap; complete only when no rewrite leaves the caps.
FactorizationSet factorizations(const Semiring& s, const Rational& x,
                                const EnumerationCaps& caps = {});

}  // namespace puiseux

#endif  // PUISEUX_SEMIRING_HPP
