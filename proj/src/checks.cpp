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

#include "puiseux/checks.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "puiseux/errors.hpp"
#include "puiseux/oracle.hpp"
#include "puiseux/parse.hpp"

namespace puiseux::checks {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIP";
  }
  return "?";
}

std::vector<Instance> default_pool() {
  std::vector<Instance> out;
  const auto add = [&](const std::string& r, const std::string& n) {
    out.push_back(parse_instance(r + "@" + n));
  };
  add("2/3", "gens:1");
  add("5/2", "gens:1");
  add("2/3", "elems:0;cond:2");
  add("2/3", "elems:0,18,19,25,27;cond:36");
  add("3/5", "gens:2,3");
  add("7/3", "gens:3,4,5");
  return out;
}

Instance parse_instance(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw ParseError("expected R@NSPEC", text.size());
  Rational r;
  try {
    r = Rational::parse(std::string_view(text).substr(0, at));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.position());
  }
  NumericalMonoid monoid = NumericalMonoid::naturals();
  try {
    monoid = parse_monoid(std::string_view(text).substr(at + 1));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), at + 1 + e.position());
  }
  if (r.sign() <= 0) throw ParseError("r must be positive", 0);
  return Instance{r.to_string() + "@" + monoid.to_string(), Semiring(r, monoid)};
}

Factorization random_factorization(std::mt19937_64& rng, AtomIndex max_index,
                                   Multiplicity max_count, int max_terms) {
  std::uniform_int_distribution<AtomIndex> index(0, max_index);
  std::uniform_int_distribution<Multiplicity> count(1, max_count);
  std::uniform_int_distribution<int> terms(1, max_terms);
  Factorization z;
  for (int t = terms(rng); t > 0; --t) z.add(index(rng), count(rng));
  return z;
}

EnumerationCaps desk_caps(const Semiring& s) {
  EnumerationCaps caps;
  caps.budget = 2'000'000;
  if (s.below_one()) {
    caps.exp_cap = s.monoid().conductor_index() + 8;
    caps.len_cap = 24;
  } else {
    caps.len_cap.reset();
  }
  return caps;
}

namespace {

std::string join(const auto& values) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << "}";
  return out.str();
}

Outcome pass(std::string claim, std::string detail = {}) {
  return Outcome{std::move(claim), Status::Pass, std::move(detail)};
}
Outcome fail(std::string claim, std::string detail) {
  return Outcome{std::move(claim), Status::Fail, std::move(detail)};
}
Outcome skip(std::string claim, std::string detail) {
  return Outcome{std::move(claim), Status::Skipped, std::move(detail)};
}

bool needs_nontrivial(const Semiring& s) { return s.is_nontrivial_atomic(); }

// Small elements whose factorizations stay cheap to enumerate.
Factorization sample(const Semiring& s, std::mt19937_64& rng) {
  return random_factorization(rng, s.below_one() ? 6 : 4, 5, 3);
}

// Z(x) exhaustively for r > 1, within a length window for r < 1.
FactorizationSet sample_set(const Semiring& s, const Rational& x) {
  EnumerationCaps caps = desk_caps(s);
  if (s.below_one()) {
    caps.len_cap.reset();
    caps = length_window_caps(s, x, 4 * s.length_step().get_ui(), caps);
  }
  return factorizations(s, x, caps);
}

}  // namespace

Outcome check_rewrite_invariance(const Semiring& s, std::uint64_t trials, std::uint64_t seed) {
  const std::string claim = "rewrite preserves pi";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<AtomIndex> index(0, 6);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Factorization z = random_factorization(rng, 6, 12, 3);
    const AtomIndex k = index(rng);
    const bool up = rng() % 2 == 0;
    const auto cost = up ? s.up_cost(k) : s.down_cost(k);
    if (!cost) continue;
    const AtomIndex at = up ? k : k + 1;
    if (z.count(at) < *cost) z.add(at, *cost - z.count(at));
    const Factorization moved = rewrite(s, z, k, up ? Direction::Up : Direction::Down);
    if (s.pi(moved) != s.pi(z)) {
      return fail(claim, z.to_string() + " at " + std::to_string(k) + " -> " + moved.to_string());
    }
  }
  return pass(claim, std::to_string(trials) + " triples");
}

Outcome check_extremal_uniqueness(const Semiring& s, std::uint64_t trials, std::uint64_t seed) {
  const std::string claim = "unique extremal factorizations";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  std::mt19937_64 rng(seed);
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Rational x = s.pi(sample(s, rng));
    const FactorizationSet set = sample_set(s, x);
    if (set.budget_exhausted) {
      ++skipped;
      continue;
    }
    std::uint64_t mins = 0;
    std::uint64_t maxes = 0;
    for (const auto& z : set.items) {
      mins += is_extremal(s, z, Extremum::Min) ? 1 : 0;
      maxes += is_extremal(s, z, Extremum::Max) ? 1 : 0;
    }
    const bool ok = mins == 1 && (s.below_one() ? maxes <= 1 : maxes == 1);
    if (!ok) {
      return fail(claim, "x=" + x.to_string() + " min=" + std::to_string(mins) +
                             " max=" + std::to_string(maxes));
    }
    ++checked;
  }
  if (checked == 0) return skip(claim, "budget exhausted on every sample");
  return pass(claim, std::to_string(checked) + " sets, " + std::to_string(skipped) + " skipped");
}

Outcome check_length_congruence(const Semiring& s, std::uint64_t trials, std::uint64_t seed) {
  const std::string claim = "lengths congruent modulo |n-d|";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  const Multiplicity step = s.length_step().get_ui();
  std::mt19937_64 rng(seed);
  std::uint64_t checked = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Rational x = s.pi(sample(s, rng));
    const FactorizationSet set = sample_set(s, x);
    if (set.items.empty()) continue;
    const Multiplicity base = set.items.front().length() % step;
    for (const auto& z : set.items) {
      if (z.length() % step != base) {
        return fail(claim, "x=" + x.to_string() + " has lengths " +
                               std::to_string(set.items.front().length()) + " and " +
                               std::to_string(z.length()));
      }
    }
    ++checked;
  }
  return pass(claim, std::to_string(checked) + " length sets");
}

Outcome check_aap(const Semiring& s, std::uint64_t trials, std::uint64_t seed, bool* uniform_b) {
  const std::string claim = "length sets are AAPs with difference |n-d|";
  if (uniform_b) *uniform_b = false;
  if (!needs_nontrivial(s) || s.below_one()) return skip(claim, "needs r > 1");
  const Multiplicity step = s.length_step().get_ui();
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> bounds;
  std::uint64_t checked = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Rational x = s.pi(sample(s, rng));
    EnumerationCaps caps = desk_caps(s);
    const LengthSet ls = length_set(s, x, caps);
    if (!ls.complete) continue;
    try {
      bounds.insert(aap_decompose(ls.lengths, step).bound);
    } catch (const Error& e) {
      return fail(claim, "x=" + x.to_string() + ": " + e.what());
    }
    ++checked;
  }
  if (checked == 0) return skip(claim, "no complete length set");
  if (uniform_b) *uniform_b = bounds.size() == 1;
  return pass(claim, std::to_string(checked) + " sets, per-element B in " + join(bounds) +
                         ", uniform B = " + std::to_string(*bounds.rbegin()));
}

Outcome check_oracle_factorizations(const Semiring& s, std::uint64_t trials, std::uint64_t seed) {
  const std::string claim = "factorizations match the oracle";
  if (!needs_nontrivial(s) || s.below_one()) return skip(claim, "needs r > 1 (finite Z(x))");
  std::mt19937_64 rng(seed);
  std::uint64_t checked = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Rational x = s.pi(sample(s, rng));
    const FactorizationSet mine = factorizations(s, x, desk_caps(s));
    const auto window = oracle::value_window(s, x);
    const auto theirs = oracle::representations(s, x, window, {}, oracle::kDefaultBudget);
    if (mine.budget_exhausted || theirs.partial) continue;
    if (mine.items != theirs.items) {
      return fail(claim, "x=" + x.to_string() + ": " + std::to_string(mine.items.size()) +
                             " vs oracle " + std::to_string(theirs.items.size()));
    }
    ++checked;
  }
  if (checked == 0) return skip(claim, "budget exhausted on every sample");
  return pass(claim, std::to_string(checked) + " elements");
}

Outcome check_oracle_membership(const Semiring& s, std::uint64_t trials, std::uint64_t seed) {
  const std::string claim = "membership matches the oracle";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  std::mt19937_64 rng(seed);
  const AtomIndex reach = s.monoid().conductor_index() + 4;
  std::uniform_int_distribution<std::uint64_t> exponent(0, s.monoid().element(reach));
  std::uniform_int_distribution<int> cofactor(1, 3);
  std::uint64_t members = 0;
  std::uint64_t outsiders = 0;
  std::uint64_t skipped = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rational x;
    if (t % 2 == 0) {
      x = s.pi(random_factorization(rng, reach, 4, 3));
    } else {
      // A random fraction over d^t times a small cofactor; mostly outsiders.
      const BigInt den = big_pow(s.den(), exponent(rng)) * cofactor(rng);
      const BigInt span = den * 4;
      BigInt num = 1 + BigInt(static_cast<unsigned long>(rng() % 1'000'003)) % span;
      x = Rational(num, den);
    }
    const auto decoded = member(s, x);
    const auto truth = oracle::is_member(s, x, 2);
    if (!truth) {
      ++skipped;
      continue;
    }
    if (decoded.has_value() != *truth) {
      return fail(claim, "x=" + x.to_string() + " decoder says " +
                             (decoded ? "member" : "non-member"));
    }
    if (decoded && s.pi(*decoded) != x) {
      return fail(claim, "x=" + x.to_string() + " decodes to " + decoded->to_string());
    }
    (*truth ? members : outsiders) += 1;
  }
  return pass(claim, std::to_string(members) + " members, " + std::to_string(outsiders) +
                         " non-members, " + std::to_string(skipped) + " skipped");
}

Outcome check_betti_characterization(const Semiring& s, const Rational& value_cap) {
  const std::string claim = "|R_x| > 1 iff x is a Betti element (x <= " + value_cap.to_string() + ")";
  if (!needs_nontrivial(s) || s.below_one()) return skip(claim, "needs r > 1");
  std::set<Rational> betti;
  for (AtomIndex k = 0; s.atom(k + 1) <= value_cap; ++k) {
    const Rational b = Rational(big_pow(s.num(), s.monoid().gap(k))) * s.atom(k);
    if (b <= value_cap) betti.insert(b);
  }
  // Every member up to the cap as a sum of atoms not exceeding it.
  std::vector<Rational> atoms;
  for (AtomIndex k = 0; s.atom(k) <= value_cap; ++k) atoms.push_back(s.atom(k));
  std::set<Rational> members;
  std::vector<std::pair<std::size_t, Rational>> stack{{0, Rational(0)}};
  while (!stack.empty()) {
    auto [from, value] = stack.back();
    stack.pop_back();
    for (std::size_t i = from; i < atoms.size(); ++i) {
      const Rational next = value + atoms[i];
      if (next > value_cap) continue;
      members.insert(next);
      stack.emplace_back(i, next);
    }
  }
  std::uint64_t split = 0;
  for (const auto& x : members) {
    const FactorizationSet set = factorizations(s, x, desk_caps(s));
    if (!set.complete) return skip(claim, "incomplete Z(" + x.to_string() + ")");
    const bool many = rclasses(set.items, true).classes.size() > 1;
    if (many != (betti.count(x) > 0)) {
      return fail(claim, "x=" + x.to_string() + (many ? " has several R-classes but is not Betti"
                                                      : " is Betti but has one R-class"));
    }
    split += many ? 1 : 0;
  }
  std::vector<std::string> shown;
  for (const auto& b : betti) shown.push_back(b.to_string());
  return pass(claim, std::to_string(members.size()) + " members, Betti " + join(shown));
}

Outcome check_betti_two_classes(const Semiring& s, std::uint64_t count) {
  const std::string claim = "Betti elements have two R-classes split at k | k+1";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  for (const auto& b : betti_elements(s, count)) {
    FactorizationSet set;
    if (s.below_one()) {
      // Both sides of the defining identity must sit inside the window.
      const BigInt wide = big_pow(s.den(), s.monoid().gap(b.index));
      if (wide > 64) {
        ++skipped;
        continue;
      }
      EnumerationCaps caps = desk_caps(s);
      caps.len_cap.reset();
      caps = length_window_caps(s, b.element, wide.get_ui(), caps);
      set = factorizations(s, b.element, caps);
    } else {
      set = factorizations(s, b.element, desk_caps(s));
      if (!set.complete) {
        ++skipped;
        continue;
      }
    }
    const auto parts = rclasses(set.items, set.complete);
    const auto high = [&](const Factorization& z) { return z.coeffs().begin()->first > b.index; };
    bool ok = parts.classes.size() == 2;
    if (ok) {
      const auto& a = parts.classes[0];
      const auto& c = parts.classes[1];
      const bool a_low = std::any_of(a.begin(), a.end(), [&](const auto& z) { return z.count(b.index) > 0; });
      const auto& lo = a_low ? a : c;
      const auto& hi = a_low ? c : a;
      ok = std::all_of(lo.begin(), lo.end(),
                       [&](const auto& z) { return z.coeffs().begin()->first <= b.index; }) &&
           std::all_of(hi.begin(), hi.end(), high) &&
           std::any_of(hi.begin(), hi.end(), [&](const auto& z) { return z.count(b.index + 1) > 0; });
    }
    if (!ok) {
      return fail(claim, "Betti " + b.element.to_string() + " gives " +
                             std::to_string(parts.classes.size()) + " classes");
    }
    ++checked;
  }
  if (checked == 0) return skip(claim, "no Betti element at desk scale");
  return pass(claim, std::to_string(checked) + " Betti elements, " + std::to_string(skipped) +
                         " skipped");
}

Outcome check_catenary(const Semiring& s, std::uint64_t betti_count) {
  const std::string claim = "catenary degree matches max(n,d)^delta_0";
  if (!s.is_atomic()) return skip(claim, "not atomic");
  const BigInt closed = catenary_semiring(s);
  if (!needs_nontrivial(s)) {
    return closed == 0 ? pass(claim, "trivial: 0") : fail(claim, "trivial semiring gives " + closed.get_str());
  }
  BigInt best = 0;
  std::uint64_t examined = 0;
  for (const auto& b : betti_elements(s, betti_count)) {
    if (s.below_one()) {
      const BigInt wide = big_pow(s.den(), s.monoid().gap(b.index));
      if (wide > 64) continue;
      EnumerationCaps caps = desk_caps(s);
      caps.len_cap.reset();
      caps = length_window_caps(s, b.element, wide.get_ui(), caps);
      const auto c = catenary_element(s, b.element, caps);
      if (BigInt(static_cast<unsigned long>(c.value)) > closed) {
        return fail(claim, "truncated c(" + b.element.to_string() + ") = " +
                               std::to_string(c.value) + " exceeds " + closed.get_str());
      }
    } else {
      const auto c = catenary_element(s, b.element, desk_caps(s));
      if (!c.exact) return skip(claim, "Z(" + b.element.to_string() + ") incomplete");
      best = std::max(best, BigInt(static_cast<unsigned long>(c.value)));
    }
    ++examined;
  }
  if (s.below_one()) {
    return pass(claim, "c(S) = " + closed.get_str() + ", " + std::to_string(examined) +
                           " truncated lower bounds within it");
  }
  if (best != closed) {
    return fail(claim, "Betti maximum " + best.get_str() + " vs closed form " + closed.get_str());
  }
  return pass(claim, "c(S) = " + closed.get_str() + " attained over " + std::to_string(examined) +
                         " Betti elements");
}

Outcome check_delta_sandwich(const Semiring& s, std::uint64_t index_cap, std::uint64_t samples) {
  const std::string claim = "delta set inside the sandwich interval, extremes attained";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  // Windows for r < 1 grow exponentially in width / |n-d|.
  const Multiplicity window = s.below_one() ? 16 * s.length_step().get_ui() : 1024;
  EnumerationCaps caps;
  caps.len_cap = window;
  caps.budget = 2'000'000;
  const DeltaReport r = delta_semiring(s, index_cap, samples, caps);
  std::string detail = "proven " + join(r.proven) + " in [" + r.interval_low.get_str() + "," +
                       r.interval_high.get_str() + "]";
  if (!r.within_interval()) return fail(claim, detail);
  if (!r.min_witness.attained) return fail(claim, detail + "; min witness not attained");
  const bool reachable_max = r.interval_high <= window;
  if (reachable_max && !r.max_witness.attained) {
    return fail(claim, detail + "; max witness not attained");
  }
  for (const auto& f : r.lower_family) {
    if (f <= window && !(f.fits_ulong_p() && r.proven.count(f.get_ui()))) {
      return fail(claim, detail + "; lower family member " + f.get_str() + " missing");
    }
  }
  if (!reachable_max) detail += "; max witness beyond the length window";
  return pass(claim, detail);
}

Outcome check_omega(const Semiring& s) {
  const std::string claim = "omega finite iff r > 1";
  if (!s.is_atomic()) return skip(claim, "not atomic");
  if (s.below_one()) {
    const auto r = omega(s, 0, 4, 4);
    return r.status == OmegaStatus::Infinite ? pass(claim, "infinite")
                                             : fail(claim, "r < 1 gave a finite status");
  }
  if (!needs_nontrivial(s)) return pass(claim, "trivial: omega = 1");
  const BigInt bound = omega_bound(s);
  if (bound > 2000) return skip(claim, "bound K = " + bound.get_str() + " beyond desk scale");
  const AtomIndex m = s.monoid().conductor_index();
  const auto r = omega(s, m, m + 4, bound.get_ui() + 1, oracle::kDefaultBudget);
  const std::string detail = "omega(r^{F+1}) = " + std::to_string(r.lower) + ", K = " +
                             bound.get_str() + ", " + std::string(to_string(r.status));
  if (BigInt(static_cast<unsigned long>(r.lower)) > bound) return fail(claim, detail);
  if (r.status != OmegaStatus::Finite) return fail(claim, detail);
  return pass(claim, detail);
}

Outcome check_unions(const Semiring& s, Multiplicity max_k, AtomIndex atom_index_cap) {
  const std::string claim = "U_k windows are progressions with difference |n-d|";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  const Multiplicity step = s.length_step().get_ui();
  EnumerationCaps caps = desk_caps(s);
  caps.len_cap = s.below_one() ? 16 : 48;
  std::ostringstream detail;
  for (Multiplicity k = 1; k <= max_k; ++k) {
    const UnionWindow narrow = union_k(s, k, atom_index_cap, caps);
    const UnionWindow wide = union_k(s, k, atom_index_cap + 2, caps);
    Multiplicity stable = std::min(narrow.exact_through.value_or(0), wide.exact_through.value_or(0));
    // Lengths the wider window adds below the bound are not yet settled.
    for (auto v : wide.lengths) {
      if (!std::binary_search(narrow.lengths.begin(), narrow.lengths.end(), v)) {
        stable = std::min<Multiplicity>(stable, v == 0 ? 0 : v - 1);
        break;
      }
    }
    std::vector<Multiplicity> settled;
    for (auto v : narrow.lengths) {
      if (v <= stable) settled.push_back(v);
    }
    for (std::size_t i = 1; i < settled.size(); ++i) {
      if (settled[i] - settled[i - 1] != step) {
        return fail(claim, "U_" + std::to_string(k) + " gap " + std::to_string(settled[i - 1]) +
                               ".." + std::to_string(settled[i]));
      }
    }
    detail << "U_" << k << " settled " << settled.size() << " through " << stable << "; ";
  }
  return pass(claim, detail.str());
}

Outcome check_unique_chains(const Semiring& s, std::uint64_t max_n) {
  const std::string claim = "sums of distinct atoms 1..n factor uniquely";
  if (!needs_nontrivial(s)) return skip(claim, "not a nontrivial atomic semiring");
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    Factorization z;
    for (AtomIndex i = 1; i <= n; ++i) z.add(i, 1);
    EnumerationCaps caps = desk_caps(s);
    caps.exp_cap = std::max<AtomIndex>(caps.exp_cap, n + 1);
    const FactorizationSet set = factorizations(s, s.pi(z), caps);
    if (!set.complete || set.items.size() != 1 || set.items.front() != z) {
      return fail(claim, "n=" + std::to_string(n) + " gives " + std::to_string(set.items.size()) +
                             " factorizations");
    }
  }
  return pass(claim, "n <= " + std::to_string(max_n));
}

Outcome check_classification(const Semiring& s) {
  const std::string claim = "classification flags";
  const Classification c = classify(s);
  const bool at_least_one = s.base() >= Rational(1);
  const bool ok = c.atomic == s.is_atomic() && c.accp == at_least_one &&
                  c.accp_presentable == (c.atomic && at_least_one) &&
                  c.locally_tame == (s.kind() == SemiringClass::Trivial) &&
                  c.globally_tame == c.locally_tame;
  return ok ? pass(claim, std::string(to_string(s.kind()))) : fail(claim, "inconsistent flags");
}

std::vector<Outcome> verify_instance(const Semiring& s, std::uint64_t seed) {
  std::vector<Outcome> out;
  out.push_back(check_classification(s));
  if (!s.is_atomic()) return out;
  out.push_back(check_catenary(s, 5));
  out.push_back(check_omega(s));
  if (!needs_nontrivial(s)) return out;
  out.push_back(check_rewrite_invariance(s, 1000, seed));
  out.push_back(check_extremal_uniqueness(s, 50, seed));
  out.push_back(check_length_congruence(s, 50, seed + 1));
  out.push_back(check_aap(s, 50, seed + 2));
  out.push_back(check_oracle_factorizations(s, 30, seed + 3));
  out.push_back(check_oracle_membership(s, 60, seed + 4));
  out.push_back(check_betti_characterization(s, Rational(30)));
  out.push_back(check_betti_two_classes(s, 4));
  out.push_back(check_delta_sandwich(s, 6, 10));
  out.push_back(check_unions(s, 4, 3));
  out.push_back(check_unique_chains(s, 6));
  return out;
}

}  // namespace puiseux::checks
