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
#include <vector>

#include "puiseux/errors.hpp"
#include "puiseux/invariants.hpp"

namespace puiseux {

std::string_view to_string(OmegaStatus status) {
  switch (status) {
    case OmegaStatus::Finite:
      return "finite";
    case OmegaStatus::Infinite:
      return "infinite";
    case OmegaStatus::BoundedEstimate:
      return "bounded-estimate";
  }
  return "unknown";
}

BigInt omega_bound(const Semiring& s) {
  s.require_atomic();
  if (s.kind() == SemiringClass::Trivial) return 1;
  const auto& monoid = s.monoid();
  const AtomIndex m = monoid.conductor_index();
  const std::uint64_t top = monoid.element(m);
  BigInt sum = 0;
  for (AtomIndex i = 0; i < m; ++i) sum += big_pow(s.num(), top - monoid.element(i));
  return std::max(BigInt(s.den()), sum);
}

namespace {

struct BouquetSearch {
  const Semiring& s;
  Rational atom;
  AtomIndex lo;
  AtomIndex hi;
  Multiplicity size_cap;
  std::uint64_t budget;

  BouquetSearch(const Semiring& sr, Rational a, AtomIndex from, AtomIndex to, Multiplicity cap,
                std::uint64_t nodes)
      : s(sr), atom(std::move(a)), lo(from), hi(to), size_cap(cap), budget(nodes) {}

  std::uint64_t spent = 0;
  bool exhausted = false;
  bool reached_cap = false;  // a non-divisible multiset of size size_cap exists
  std::vector<Factorization> found;

  bool divisible(const Rational& value) {
    ++spent;
    return divides(s, atom, value);
  }

  // Only non-divisible multisets are extended: a minimal bouquet has no
  // divisible proper sub-multiset, so its canonical prefixes all qualify.
  void extend(Factorization& z, const Rational& value, AtomIndex from) {
    if (z.length() == size_cap) {
      reached_cap = true;
      return;
    }
    for (AtomIndex i = from; i <= hi; ++i) {
      if (spent >= budget) {
        exhausted = true;
        return;
      }
      const Rational next_value = value + s.atom(i);
      z.add(i, 1);
      if (divisible(next_value)) {
        if (minimal(z, next_value)) found.push_back(z);
      } else {
        extend(z, next_value, i);
      }
      z.remove(i, 1);
    }
  }

  bool minimal(const Factorization& z, const Rational& value) {
    for (const auto& [i, c] : z.coeffs()) {
      if (divisible(value - s.atom(i))) return false;
    }
    return true;
  }

  void run() {
    Factorization z;
    extend(z, Rational(0), lo);
  }
};

}  // namespace

OmegaResult omega(const Semiring& s, AtomIndex atom_index, AtomIndex exp_cap,
                  Multiplicity size_cap, std::uint64_t budget) {
  s.require_atomic();
  OmegaResult out;
  out.exp_cap = exp_cap;
  out.size_cap = size_cap;
  if (s.kind() == SemiringClass::Trivial) {
    if (atom_index != 0) throw Error(ErrorKind::InvalidArgument, "the only atom has index 0");
    out.status = OmegaStatus::Finite;
    out.lower = 1;
    out.upper = BigInt(1);
    out.witnesses.push_back(Factorization{{0, 1}});
    return out;
  }
  if (s.below_one()) {
    out.status = OmegaStatus::Infinite;
    return out;
  }
  if (size_cap == 0) throw Error(ErrorKind::InvalidArgument, "size cap must be positive");

  const auto& monoid = s.monoid();
  const AtomIndex m = monoid.conductor_index();
  const Rational atom = s.atom(atom_index);

  // A minimal bouquet lies entirely at indices <= atom_index or entirely
  // above it.
  BouquetSearch low(s, atom, 0, atom_index, size_cap, budget);
  low.run();
  std::vector<Factorization> bouquets = low.found;
  bool closed = !low.reached_cap && !low.exhausted;
  out.budget_exhausted = low.exhausted;

  if (atom_index >= m) {
    // Above the conductor consecutive exponents differ by one, so a high
    // bouquet is exactly d copies of a single atom.
    const auto d = s.den().get_ui();
    for (AtomIndex j = atom_index + 1; j <= std::max(exp_cap, atom_index + 1); ++j) {
      bouquets.push_back(Factorization{{j, d}});
    }
  } else {
    const AtomIndex hi = std::max(exp_cap, atom_index + 1);
    BouquetSearch high(s, atom, atom_index + 1, hi, size_cap,
                       budget > low.spent ? budget - low.spent : 0);
    high.run();
    bouquets.insert(bouquets.end(), high.found.begin(), high.found.end());
    out.budget_exhausted = out.budget_exhausted || high.exhausted;
    closed = false;  // the high range is only searched up to exp_cap
  }

  for (const auto& z : bouquets) out.lower = std::max(out.lower, z.length());
  for (const auto& z : bouquets) {
    if (z.length() == out.lower && out.witnesses.size() < 16) out.witnesses.push_back(z);
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  if (atom_index == m) out.upper = omega_bound(s);

  const bool meets_bound = out.upper && BigInt(static_cast<unsigned long>(out.lower)) == *out.upper;
  out.status = (closed || meets_bound) ? OmegaStatus::Finite : OmegaStatus::BoundedEstimate;
  return out;
}

Classification classify(const Semiring& s) {
  Classification c;
  const auto kind = s.kind();
  const bool trivial = kind == SemiringClass::Trivial;
  c.atomic = kind != SemiringClass::NonAtomic;
  c.accp = s.base() >= Rational(1);
  c.ffm_known = trivial || kind == SemiringClass::AtomicAboveOne;
  c.locally_tame = trivial;
  c.globally_tame = trivial;
  c.accp_presentable = c.atomic && c.accp;
  return c;
}

}  // namespace puiseux
