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
#include <random>

#include "puiseux/invariants.hpp"

namespace puiseux {

bool DeltaReport::within_interval() const {
  return std::all_of(proven.begin(), proven.end(), [&](Multiplicity v) {
    const BigInt b(static_cast<unsigned long>(v));
    return interval_low <= b && b <= interval_high;
  });
}

bool DeltaReport::lower_family_proven() const {
  return std::all_of(lower_family.begin(), lower_family.end(), [&](const BigInt& v) {
    return v.fits_ulong_p() && proven.count(v.get_ui()) > 0;
  });
}

namespace {

BigInt abs_diff(const BigInt& a, const BigInt& b) { return a > b ? BigInt(a - b) : BigInt(b - a); }

struct Examined {
  std::set<Multiplicity> found;
  bool incomplete = false;
};

// Distances of x visible in the window min L(x) + extra.
Examined examine(const Semiring& s, const Rational& x, Multiplicity extra,
                 const EnumerationCaps& caps) {
  const LengthSet ls = length_window(s, x, extra, caps);
  Examined out;
  out.found = proven_delta(ls);
  const Multiplicity wanted = ls.lengths.empty() ? 0 : ls.lengths.front() + extra;
  const Multiplicity cap = caps.len_cap.value_or(std::numeric_limits<Multiplicity>::max());
  out.incomplete =
      !ls.exact_through || (!ls.complete && *ls.exact_through < std::min(wanted, cap));
  return out;
}

}  // namespace

DeltaReport delta_semiring(const Semiring& s, std::uint64_t index_cap, std::uint64_t samples,
                           const EnumerationCaps& caps, std::uint64_t seed) {
  s.require_atomic();
  DeltaReport report;
  if (s.kind() == SemiringClass::Trivial) return report;

  const BigInt& n = s.num();
  const BigInt& d = s.den();
  const auto& monoid = s.monoid();
  report.interval_low = abs_diff(n, d);
  report.interval_high = abs_diff(big_pow(n, monoid.gap(0)), big_pow(d, monoid.gap(0)));
  for (AtomIndex k = 0; k <= index_cap; ++k) {
    report.lower_family.insert(abs_diff(big_pow(n, monoid.gap(k)), big_pow(d, monoid.gap(k))));
  }

  // Every distance is at most interval_high, so a window three times that
  // wide past the shortest length shows the gaps that matter. caps.len_cap
  // bounds the window width.
  Multiplicity extra = caps.len_cap.value_or(std::numeric_limits<Multiplicity>::max());
  if (report.interval_high.fits_ulong_p() &&
      report.interval_high.get_ui() < std::numeric_limits<Multiplicity>::max() / 3) {
    extra = std::min<Multiplicity>(extra, 3 * report.interval_high.get_ui());
  }

  EnumerationCaps relative = caps;
  relative.len_cap.reset();
  auto take = [&](const Rational& x) {
    const Examined e = examine(s, x, extra, relative);
    report.proven.insert(e.found.begin(), e.found.end());
    ++report.elements_examined;
    if (e.incomplete) ++report.incomplete_elements;
    return e.found;
  };

  for (const auto& b : betti_elements(s, index_cap + 1)) take(b.element);

  std::mt19937_64 rng(seed);
  const AtomIndex top = std::min<AtomIndex>(index_cap, 8);
  std::uniform_int_distribution<AtomIndex> pick_index(0, top);
  std::uniform_int_distribution<Multiplicity> pick_count(1, 4);
  std::uniform_int_distribution<int> pick_terms(1, 3);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Factorization z;
    for (int t = pick_terms(rng); t > 0; --t) z.add(pick_index(rng), pick_count(rng));
    take(s.pi(z));
  }

  const AtomIndex m = monoid.conductor_index();
  report.min_witness.element = Rational(n) * s.atom(m);
  report.min_witness.distance = report.interval_low;
  report.max_witness.element = Rational(big_pow(n, monoid.gap(0))) * s.atom(0);
  report.max_witness.distance = report.interval_high;
  for (DistanceWitness* w : {&report.min_witness, &report.max_witness}) {
    w->found = take(w->element);
    w->attained = w->distance.fits_ulong_p() && w->found.count(w->distance.get_ui()) > 0;
  }
  return report;
}

}  // namespace puiseux
