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

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "puiseux/errors.hpp"
#include "puiseux/invariants.hpp"

namespace puiseux {

std::vector<BettiElement> betti_elements(const Semiring& s, std::uint64_t count) {
  s.require_atomic();
  std::vector<BettiElement> out;
  if (s.kind() == SemiringClass::Trivial) return out;
  for (AtomIndex k = 0; k < count; ++k) {
    BettiElement b;
    b.index = k;
    b.multiplicity = big_pow(s.num(), s.monoid().gap(k));
    b.element = Rational(b.multiplicity) * s.atom(k);
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

RClassPartition rclasses(std::span<const Factorization> items, bool complete) {
  RClassPartition out;
  out.complete = complete;
  DisjointSets sets(items.size());
  // Sharing an atom is the edge relation; linking every holder of an atom to
  // the first one is enough for the components.
  std::map<AtomIndex, std::size_t> first_holder;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const auto& [atom, c] : items[i].coeffs()) {
      auto [it, fresh] = first_holder.emplace(atom, i);
      if (!fresh) sets.unite(it->second, i);
    }
  }
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto root = sets.find(i);
    auto [it, fresh] = slot.emplace(root, out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(items[i]);
  }
  return out;
}

RClassPartition rclasses(const Semiring& s, const Rational& x, const EnumerationCaps& caps) {
  s.require_atomic();
  const FactorizationSet set = factorizations(s, x, caps);
  if (set.items.empty() && set.complete) {
    throw Error(ErrorKind::NotMember, x.to_string() + " is not in the semiring");
  }
  return rclasses(set.items, set.complete);
}

Multiplicity catenary_of(std::span<const Factorization> items) {
  // Prim on the complete graph; the heaviest tree edge is the bottleneck.
  const std::size_t size = items.size();
  if (size < 2) return 0;
  constexpr Multiplicity kFar = std::numeric_limits<Multiplicity>::max();
  std::vector<Multiplicity> link(size, kFar);
  std::vector<bool> done(size, false);
  link[0] = 0;
  Multiplicity worst = 0;
  for (std::size_t round = 0; round < size; ++round) {
    std::size_t pick = size;
    for (std::size_t v = 0; v < size; ++v) {
      if (!done[v] && (pick == size || link[v] < link[pick])) pick = v;
    }
    done[pick] = true;
    worst = std::max(worst, link[pick]);
    for (std::size_t v = 0; v < size; ++v) {
      if (!done[v]) link[v] = std::min(link[v], distance(items[pick], items[v]));
    }
  }
  return worst;
}

CatenaryResult catenary_element(const Semiring& s, const Rational& x, const EnumerationCaps& caps) {
  s.require_atomic();
  const FactorizationSet set = factorizations(s, x, caps);
  if (set.items.empty() && set.complete) {
    throw Error(ErrorKind::NotMember, x.to_string() + " is not in the semiring");
  }
  return CatenaryResult{catenary_of(set.items), set.complete};
}

BigInt catenary_semiring(const Semiring& s) {
  s.require_atomic();
  if (s.kind() == SemiringClass::Trivial) return 0;
  return big_pow(std::max(s.num(), s.den()), s.monoid().gap(0));
}

}  // namespace puiseux
