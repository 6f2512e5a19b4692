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
#include <deque>
#include <limits>
#include <unordered_set>

#include "puiseux/checked.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/invariants.hpp"

namespace puiseux {

LengthSet length_set(const Semiring& s, const Rational& x, const EnumerationCaps& caps) {
  s.require_atomic();
  const FactorizationSet set = factorizations(s, x, caps);
  LengthSet out;
  out.exp_cap = set.exp_cap;
  out.len_cap = set.len_cap;
  out.complete = set.complete;
  out.exact_through = set.exact_through;
  if (set.items.empty() && set.complete) {
    out.member = false;
    return out;
  }
  for (const auto& z : set.items) out.lengths.push_back(z.length());
  std::sort(out.lengths.begin(), out.lengths.end());
  out.lengths.erase(std::unique(out.lengths.begin(), out.lengths.end()), out.lengths.end());
  return out;
}

EnumerationCaps length_window_caps(const Semiring& s, const Rational& x, Multiplicity extra,
                                   const EnumerationCaps& base) {
  if (!s.below_one()) return base;
  const auto seed = member(s, x);
  if (!seed) return base;
  const Multiplicity shortest = seed->length();
  Multiplicity target = shortest > std::numeric_limits<Multiplicity>::max() - extra
                            ? std::numeric_limits<Multiplicity>::max()
                            : shortest + extra;
  if (base.len_cap) target = std::min(target, *base.len_cap);
  EnumerationCaps out = base;
  out.len_cap = target;
  if (target < shortest) return out;

  // Need s_{cap+1} > E + (target - shortest) / (d - n).
  const BigInt step = s.length_step();
  const BigInt span = BigInt(static_cast<unsigned long>(target - shortest)) / step;
  const std::uint64_t bound = *exponent_bound(s, x);
  if (!span.fits_ulong_p()) return out;
  const std::uint64_t needed = bound + span.get_ui() + 1;
  AtomIndex cap = 0;
  while (s.monoid().element(cap + 1) < needed) ++cap;
  if (seed->top_index()) cap = std::max(cap, *seed->top_index());
  out.exp_cap = std::min(cap, base.exp_cap);
  return out;
}

LengthSet length_window(const Semiring& s, const Rational& x, Multiplicity extra,
                        const EnumerationCaps& caps) {
  s.require_atomic();
  if (s.below_one()) return length_set(s, x, length_window_caps(s, x, extra, caps));
  LengthSet out;
  out.exp_cap = caps.exp_cap;
  const auto seed = member(s, x);
  if (!seed) {
    out.member = false;
    out.exact_through = std::numeric_limits<Multiplicity>::max();
    return out;
  }
  const Multiplicity shortest = seed->length();
  Multiplicity target = shortest > std::numeric_limits<Multiplicity>::max() - extra
                            ? std::numeric_limits<Multiplicity>::max()
                            : shortest + extra;
  if (caps.len_cap) target = std::min(target, *caps.len_cap);
  out.len_cap = target;
  if (s.kind() == SemiringClass::Trivial) {
    out.lengths = {shortest};
    out.exact_through = shortest;
    return out;
  }

  // Each factorization is reached from the shortest one by length-raising
  // moves, so capping the length keeps the closure exact below the cap.
  std::unordered_set<Factorization> seen{*seed};
  std::deque<Factorization> queue{*seed};
  std::set<Multiplicity> lengths;
  bool clipped = false;
  bool exhausted = false;
  std::uint64_t expanded = 0;
  auto visit = [&](Factorization next) {
    if (next.length() > target) {
      clipped = true;
      return;
    }
    if (seen.insert(next).second) queue.push_back(std::move(next));
  };
  while (!queue.empty()) {
    if (++expanded > caps.budget) {
      exhausted = true;
      break;
    }
    Factorization z = std::move(queue.front());
    queue.pop_front();
    lengths.insert(z.length());
    for (const auto& [i, c] : z.coeffs()) {
      const auto up = s.up_cost(i);
      if (up && c >= *up) visit(rewrite(s, z, i, Direction::Up));
      if (i >= 1) {
        const auto down = s.down_cost(i - 1);
        if (down && c >= *down) visit(rewrite(s, z, i - 1, Direction::Down));
      }
    }
  }
  out.lengths.assign(lengths.begin(), lengths.end());
  out.complete = !clipped && !exhausted;
  if (exhausted) {
    out.exact_through.reset();
  } else {
    out.exact_through = out.complete ? out.lengths.back() : target;
  }
  return out;
}

std::vector<std::int64_t> AapStructure::core() const {
  std::vector<std::int64_t> out;
  for (std::uint64_t i = 0; i < core_size; ++i) out.push_back(static_cast<std::int64_t>(i * d));
  return out;
}

std::vector<std::int64_t> AapStructure::reassemble() const {
  std::vector<std::int64_t> out;
  for (auto v : head) out.push_back(y + v);
  for (auto v : core()) out.push_back(y + v);
  for (auto v : tail) out.push_back(y + v);
  std::sort(out.begin(), out.end());
  return out;
}

AapStructure aap_decompose(std::span<const Multiplicity> lengths, std::uint64_t d) {
  if (lengths.empty()) throw Error(ErrorKind::InvalidArgument, "empty length set");
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "difference must be positive");
  std::vector<std::int64_t> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto residue = sorted.front() % static_cast<std::int64_t>(d);
  for (auto v : sorted) {
    if (v % static_cast<std::int64_t>(d) != residue) {
      throw Error(ErrorKind::MixedResidues,
                  "lengths " + std::to_string(sorted.front()) + " and " + std::to_string(v) +
                      " differ modulo " + std::to_string(d));
    }
  }
  const std::int64_t lo = sorted.front();
  const std::int64_t hi = sorted.back();
  const auto step = static_cast<std::int64_t>(d);

  // Only maximal runs y, y+d, ..., y+(k-1)d of consecutive members can be
  // optimal cores.
  bool have = false;
  AapStructure best;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + step) ++j;
    const std::int64_t y = sorted[i];
    const std::int64_t end = sorted[j];
    const auto bound = static_cast<std::uint64_t>(std::max(y - lo, hi - end));
    const std::uint64_t size = j - i + 1;
    const bool better = !have || bound < best.bound ||
                        (bound == best.bound && size > best.core_size) ||
                        (bound == best.bound && size == best.core_size && y < best.y);
    if (better) {
      have = true;
      best = AapStructure{};
      best.y = y;
      best.d = d;
      best.core_size = size;
      best.bound = bound;
      for (std::size_t h = 0; h < i; ++h) best.head.push_back(sorted[h] - y);
      for (std::size_t t = j + 1; t < sorted.size(); ++t) best.tail.push_back(sorted[t] - y);
    }
    i = j + 1;
  }
  return best;
}

std::set<Multiplicity> delta_of(std::span<const Multiplicity> lengths) {
  std::set<Multiplicity> out;
  for (std::size_t i = 1; i < lengths.size(); ++i) out.insert(lengths[i] - lengths[i - 1]);
  return out;
}

std::set<Multiplicity> proven_delta(const LengthSet& lengths) {
  std::set<Multiplicity> out;
  if (!lengths.exact_through) return out;
  for (std::size_t i = 1; i < lengths.lengths.size(); ++i) {
    if (lengths.lengths[i] > *lengths.exact_through) break;
    out.insert(lengths.lengths[i] - lengths.lengths[i - 1]);
  }
  return out;
}

UnionWindow union_k(const Semiring& s, Multiplicity k, AtomIndex atom_index_cap,
                    const EnumerationCaps& caps) {
  s.require_atomic();
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  UnionWindow out;
  if (s.kind() == SemiringClass::Trivial) {
    out.claimed_difference = 0;
    out.lengths = {k};
    out.elements = 1;
    out.exact_through = k;
    return out;
  }
  out.claimed_difference = s.length_step();
  std::set<Multiplicity> all;
  std::optional<Multiplicity> through;  // over truncated elements only
  bool first = true;

  // Multisets of k atoms as nondecreasing index sequences.
  std::vector<AtomIndex> pick(k, 0);
  while (true) {
    Factorization z;
    for (auto i : pick) z.add(i, 1);
    const Rational x = s.pi(z);
    const LengthSet ls =
        length_window(s, x, std::numeric_limits<Multiplicity>::max(), caps);
    ++out.elements;
    all.insert(ls.lengths.begin(), ls.lengths.end());
    // A complete length set constrains nothing; a truncated one is exact
    // only up to its own bound.
    if (!ls.complete) {
      const Multiplicity here = ls.exact_through.value_or(0);
      through = first ? here : std::min(*through, here);
      first = false;
    }

    // Next nondecreasing sequence.
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == atom_index_cap) --pos;
    if (pos == 0) break;
    const AtomIndex next = pick[pos - 1] + 1;
    for (std::size_t q = pos - 1; q < k; ++q) pick[q] = next;
  }
  out.lengths.assign(all.begin(), all.end());
  out.exact_through = first ? (all.empty() ? 0 : *all.rbegin()) : *through;
  return out;
}

Elasticity elasticity(const Semiring& s, const std::optional<Rational>& x) {
  s.require_atomic();
  if (!x) {
    if (s.kind() == SemiringClass::Trivial) return Rational(1);
    return std::nullopt;
  }
  if (x->is_zero()) return Rational(1);
  const auto shortest = member(s, *x);
  if (!shortest) throw Error(ErrorKind::NotMember, x->to_string() + " is not in the semiring");
  const auto longest = extremal(s, *shortest, Extremum::Max);
  if (!longest) return std::nullopt;
  return Rational(BigInt(static_cast<unsigned long>(longest->length())),
                  BigInt(static_cast<unsigned long>(shortest->length())));
}

}  // namespace puiseux
