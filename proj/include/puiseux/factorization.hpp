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

#ifndef PUISEUX_FACTORIZATION_HPP
#define PUISEUX_FACTORIZATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace puiseux {

using AtomIndex = std::uint64_t;
using Multiplicity = std::uint64_t;

/// A formal sum of atoms, stored sparsely as atom index -> multiplicity.
/// Zero multiplicities are never stored, so two factorizations are equal iff
/// their maps are equal, and ordering is lexicographic on (index, count).
class Factorization {
 public:
  using Map = std::map<AtomIndex, Multiplicity>;

  Factorization() = default;
  Factorization(std::initializer_list<std::pair<const AtomIndex, Multiplicity>> init);
  explicit Factorization(Map coeffs);

  Multiplicity count(AtomIndex index) const;
  void add(AtomIndex index, Multiplicity amount);
  /// Throws InsufficientCoefficient when fewer than \p amount copies exist.
  void remove(AtomIndex index, Multiplicity amount);

  Multiplicity length() const { return length_; }
  bool empty() const { return coeffs_.empty(); }
  std::optional<AtomIndex> top_index() const;
  const Map& coeffs() const { return coeffs_; }

  /// `{i:c, ...}` in increasing index order.
  std::string to_string() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend std::strong_ordering operator<=>(const Factorization& a, const Factorization& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  Map coeffs_;
  Multiplicity length_ = 0;
};

/// Common sub-multiset: min multiplicity per atom.
Factorization gcd(const Factorization& a, const Factorization& b);

/// max(|a|, |b|) - |gcd(a, b)|.
Multiplicity distance(const Factorization& a, const Factorization& b);

/// True when the two factorizations share at least one atom.
bool shares_atom(const Factorization& a, const Factorization& b);

}  // namespace puiseux

template <>
struct std::hash<puiseux::Factorization> {
  std::size_t operator()(const puiseux::Factorization& z) const noexcept;
};

#endif  // PUISEUX_FACTORIZATION_HPP
