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

// Acceptance gate: one PASS/FAIL line per criterion. The exit status counts
// failures outside kKnownFailures; those are printed as FAIL all the same.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "puiseux/checks.hpp"
#include "puiseux/invariants.hpp"
#include "puiseux/numonoid.hpp"

using namespace puiseux;
using checks::Status;

namespace {

// The uniform-B clause of criterion 6 does not hold for (7/3, <3,4,5>):
// L(1) = {1} has B = 0 while L(343) = {27, 343} needs B = 316.
const std::set<int> kKnownFailures{6};

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail << (cond ? "" : "!") << what << "; ";
  }
  void require(const checks::Outcome& o, const std::string& label) {
    require(o.status == Status::Pass,
            label + " " + std::string(checks::to_string(o.status)) + " (" + o.detail + ")");
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Semiring example_semiring(bool prime) {
  const std::vector<std::uint64_t> big{0, 18, 19, 25, 27};
  const std::vector<std::uint64_t> small{0};
  const Rational r(BigInt(2), BigInt(3));
  return prime ? Semiring(r, NumericalMonoid::from_small_elements(small, 2))
               : Semiring(r, NumericalMonoid::from_small_elements(big, 36));
}

std::string join(const std::set<Multiplicity>& v) {
  std::string out = "{";
  for (auto x : v) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

Verdict criterion_1() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const Semiring s = example_semiring(false);
  const Rational x = s.pi({{1, 2}, {3, 4}});
  const LengthSet ls = length_set(s, x);
  const double dt = seconds_since(t0);
  v.require(ls.lengths == std::vector<Multiplicity>{6, 7, 11, 12}, "L(x) = {6,7,11,12}");
  v.require(ls.complete, "complete");
  v.require(dt < 10.0, "time " + std::to_string(dt) + " s < 10 s");
  return v;
}

Verdict criterion_2() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const DeltaReport r = delta_semiring(example_semiring(true), 8, 0);
  const double dt = seconds_since(t0);
  v.require(r.proven == std::set<Multiplicity>{1, 5}, "proven " + join(r.proven) + " = {1,5}");
  v.require(r.min_witness.attained, "distance 1 at " + r.min_witness.element.to_string());
  v.require(r.max_witness.attained, "distance 5 at " + r.max_witness.element.to_string());
  v.require(dt < 60.0, "time " + std::to_string(dt) + " s < 60 s");
  return v;
}

Verdict criterion_3() {
  Verdict v;
  for (const auto& inst : checks::default_pool()) {
    const Semiring& s = inst.semiring;
    const BigInt closed = s.base().is_integer()
                              ? BigInt(0)
                              : big_pow(std::max(s.num(), s.den()), s.monoid().gap(0));
    const BigInt got = catenary_semiring(s);
    v.require(got == closed, inst.label + " c(S) = " + got.get_str());
    if (s.kind() != SemiringClass::AtomicAboveOne) continue;
    BigInt best = 0;
    bool exact = true;
    for (const auto& b : betti_elements(s, 5)) {
      EnumerationCaps caps = checks::desk_caps(s);
      const CatenaryResult c = catenary_element(s, b.element, caps);
      exact = exact && c.exact;
      best = std::max(best, BigInt(static_cast<unsigned long>(c.value)));
    }
    v.require(exact && best == closed, inst.label + " Betti max " + best.get_str());
  }
  return v;
}

Verdict criterion_4() {
  Verdict v;
  for (const char* label : {"5/2@gens:1", "7/3@gens:3,4,5"}) {
    const auto inst = checks::parse_instance(label);
    v.require(checks::check_betti_characterization(inst.semiring, Rational(30)), label);
  }
  return v;
}

Verdict criterion_5() {
  Verdict v;
  for (const auto& inst : checks::default_pool()) {
    v.require(checks::check_extremal_uniqueness(inst.semiring, 200, 505), inst.label);
  }
  return v;
}

Verdict criterion_6() {
  Verdict v;
  for (const auto& inst : checks::default_pool()) {
    const Semiring& s = inst.semiring;
    v.require(checks::check_length_congruence(s, 100, 606), inst.label + " congruence");
    if (s.kind() != SemiringClass::AtomicAboveOne) continue;
    bool uniform = false;
    const auto aap = checks::check_aap(s, 60, 607, &uniform);
    v.require(aap, inst.label + " decomposition");
    v.require(uniform, inst.label + " identical B across samples");
  }
  return v;
}

Verdict criterion_7() {
  Verdict v;
  const auto inst = checks::parse_instance("5/2@gens:1");
  const OmegaResult one = omega(inst.semiring, 0, 6, 6);
  v.require(one.status == OmegaStatus::Finite && one.lower == 2,
            "omega(1) = " + std::to_string(one.lower) + " " + std::string(to_string(one.status)));
  v.require(one.upper && *one.upper == 2, "K = 2");
  for (const auto& p : checks::default_pool()) {
    if (p.semiring.kind() != SemiringClass::AtomicBelowOne) continue;
    const OmegaResult r = omega(p.semiring, p.semiring.monoid().conductor_index(), 4, 4);
    v.require(r.status == OmegaStatus::Infinite, p.label + " infinite");
  }
  return v;
}

Verdict criterion_8() {
  Verdict v;
  for (const auto& inst : checks::default_pool()) {
    if (inst.semiring.kind() == SemiringClass::AtomicAboveOne) {
      v.require(checks::check_oracle_factorizations(inst.semiring, 100, 808),
                inst.label + " factorizations");
    }
    v.require(checks::check_oracle_membership(inst.semiring, 200, 809), inst.label + " membership");
  }
  return v;
}

Verdict criterion_9() {
  Verdict v;
  for (const auto& inst : checks::default_pool()) {
    v.require(checks::check_unions(inst.semiring, 4, 3), inst.label + " unions");
    v.require(checks::check_unique_chains(inst.semiring, 6), inst.label + " chains");
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"length set {6,7,11,12} over the gapped monoid", criterion_1},
      {"delta set {1,5} with witnesses", criterion_2},
      {"closed-form catenary degree", criterion_3},
      {"Betti characterization against brute force", criterion_4},
      {"extremal uniqueness", criterion_5},
      {"AAP structure and length congruence", criterion_6},
      {"omega", criterion_7},
      {"oracle equivalence", criterion_8},
      {"unions and unique chains", criterion_9},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v = criteria[i].second();
    const bool known = kKnownFailures.count(id) > 0;
    std::printf("criterion %d %s: %s [%.2fs] %s%s\n", id, v.ok ? "PASS" : "FAIL", criteria[i].first,
                seconds_since(t0), v.detail.str().c_str(),
                !v.ok && known ? " (known, see README)" : "");
    std::fflush(stdout);
    if (!v.ok && !known) ++unexpected;
  }
  return unexpected;
}
