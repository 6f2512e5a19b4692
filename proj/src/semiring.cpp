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

#include "puiseux/semiring.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "puiseux/checked.hpp"
#include "puiseux/errors.hpp"

namespace puiseux {

std::string_view to_string(SemiringClass kind) {
  switch (kind) {
    case SemiringClass::Trivial: return "Trivial";
    case SemiringClass::AtomicBelowOne: return "AtomicBelowOne";
    case SemiringClass::AtomicAboveOne: return "AtomicAboveOne";
    case SemiringClass::NonAtomic: return "NonAtomic";
  }
  return "Unknown";
}

namespace {

std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (v < 0 || !v.fits_ulong_p()) return std::nullopt;
  return v.get_ui();
}

Multiplicity to_multiplicity(const BigInt& v) {
  auto out = to_u64(v);
  if (!out) throw Error(ErrorKind::Overflow, "multiplicity " + v.get_str() + " exceeds 64 bits");
  return *out;
}

}  // namespace

Semiring::Semiring(Rational r, NumericalMonoid monoid)
    : r_(std::move(r)), monoid_(std::move(monoid)) {
  if (r_.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  num_ = r_.numerator();
  den_ = r_.denominator();
  num_small_ = to_u64(num_);
  den_small_ = to_u64(den_);
  if (den_ == 1) {
    kind_ = SemiringClass::Trivial;
  } else if (num_ == 1) {
    kind_ = SemiringClass::NonAtomic;
  } else {
    kind_ = num_ < den_ ? SemiringClass::AtomicBelowOne : SemiringClass::AtomicAboveOne;
  }
}

BigInt Semiring::length_step() const {
  BigInt diff = num_ - den_;
  return abs(diff);
}

void Semiring::require_atomic() const {
  if (!is_atomic()) {
    throw Error(ErrorKind::NotAtomic, "S_{" + r_.to_string() + "," + monoid_.to_string() +
                                          "} is not atomic (its atom set is empty)");
  }
}

void Semiring::require_nontrivial_atomic() const {
  require_atomic();
  if (kind_ == SemiringClass::Trivial) {
    throw Error(ErrorKind::InvalidArgument, "operation requires a nontrivial atomic semiring");
  }
}

Rational Semiring::atom(AtomIndex k) const {
  require_atomic();
  if (kind_ == SemiringClass::Trivial) {
    if (k != 0) throw Error(ErrorKind::InvalidArgument, "the trivial semiring has one atom");
    return Rational(1);
  }
  return r_.pow(monoid_.element(k));
}

Rational Semiring::pi(const Factorization& z) const {
  require_atomic();
  if (z.empty()) return Rational(0);
  if (kind_ == SemiringClass::Trivial) {
    if (*z.top_index() != 0) throw Error(ErrorKind::InvalidArgument, "the trivial semiring has one atom");
    return Rational(BigInt(static_cast<unsigned long>(z.length())));
  }
  // Common denominator d^S with S the largest exponent.
  const std::uint64_t top = monoid_.element(*z.top_index());
  BigInt total = 0;
  for (const auto& [k, c] : z.coeffs()) {
    const std::uint64_t e = monoid_.element(k);
    total += BigInt(static_cast<unsigned long>(c)) * big_pow(num_, e) * big_pow(den_, top - e);
  }
  return Rational(total, big_pow(den_, top));
}

std::optional<Multiplicity> Semiring::up_cost(AtomIndex k) const {
  if (!num_small_) return std::nullopt;
  return try_pow(*num_small_, monoid_.gap(k));
}

std::optional<Multiplicity> Semiring::down_cost(AtomIndex k) const {
  if (!den_small_) return std::nullopt;
  return try_pow(*den_small_, monoid_.gap(k));
}

Factorization rewrite(const Semiring& s, Factorization z, AtomIndex k, Direction direction) {
  s.require_nontrivial_atomic();
  const auto take_up = s.up_cost(k);
  const auto take_down = s.down_cost(k);
  if (direction == Direction::Up) {
    if (!take_up || z.count(k) < *take_up) {
      throw Error(ErrorKind::InsufficientCoefficient,
                  "Up move at " + std::to_string(k) + " needs n^delta copies of atom " +
                      std::to_string(k));
    }
    if (!take_down) throw Error(ErrorKind::Overflow, "d^delta exceeds 64 bits");
    z.remove(k, *take_up);
    z.add(k + 1, *take_down);
  } else {
    if (!take_down || z.count(k + 1) < *take_down) {
      throw Error(ErrorKind::InsufficientCoefficient,
                  "Down move at " + std::to_string(k) + " needs d^delta copies of atom " +
                      std::to_string(k + 1));
    }
    if (!take_up) throw Error(ErrorKind::Overflow, "n^delta exceeds 64 bits");
    z.remove(k + 1, *take_down);
    z.add(k, *take_up);
  }
  return z;
}

namespace {

// No Down move applies: c_i < d^{delta_{i-1}} for every i >= 1.
bool down_free(const Semiring& s, const Factorization& z) {
  for (const auto& [i, c] : z.coeffs()) {
    if (i == 0) continue;
    const auto cost = s.down_cost(i - 1);
    if (cost && c >= *cost) return false;
  }
  return true;
}

// No Up move applies: c_i < n^{delta_i} for every i.
bool up_free(const Semiring& s, const Factorization& z) {
  for (const auto& [i, c] : z.coeffs()) {
    const auto cost = s.up_cost(i);
    if (cost && c >= *cost) return false;
  }
  return true;
}

// Applies Down moves from the top index to the bottom until none applies.
Factorization saturate_down(const Semiring& s, Factorization z) {
  if (z.empty()) return z;
  for (AtomIndex i = *z.top_index(); i >= 1; --i) {
    const Multiplicity c = z.count(i);
    const auto cost = s.down_cost(i - 1);
    if (c == 0 || !cost || c < *cost) continue;
    const Multiplicity q = c / *cost;
    const auto gain = s.up_cost(i - 1);
    if (!gain) throw Error(ErrorKind::Overflow, "n^delta exceeds 64 bits");
    z.remove(i, checked_mul(q, *cost));
    z.add(i - 1, checked_mul(q, *gain));
  }
  return z;
}

// Applies Up moves from the bottom index upwards until none applies. For
// r < 1 the carries may never stop; that is detected once the scan is past
// both the support and the conductor index (all gaps are 1 there and a carry
// of q * d >= d > n copies always triggers the next move).
std::optional<Factorization> saturate_up(const Semiring& s, Factorization z) {
  if (z.empty()) return z;
  const AtomIndex stable_from = s.monoid().conductor_index();
  for (AtomIndex i = z.coeffs().begin()->first;; ++i) {
    const Multiplicity c = z.count(i);
    const auto cost = s.up_cost(i);
    const bool movable = c > 0 && cost && c >= *cost;
    if (i >= *z.top_index()) {
      if (!movable) break;
      if (s.below_one() && i >= stable_from) return std::nullopt;
    }
    if (!movable) continue;
    const Multiplicity q = c / *cost;
    const auto gain = s.down_cost(i);
    if (!gain) throw Error(ErrorKind::Overflow, "d^delta exceeds 64 bits");
    z.remove(i, checked_mul(q, *cost));
    z.add(i + 1, checked_mul(q, *gain));
  }
  return z;
}

Factorization trivial_normal_form(const Factorization& z) {
  Factorization out;
  out.add(0, z.length());
  return out;
}

}  // namespace

bool is_extremal(const Semiring& s, const Factorization& z, Extremum which) {
  s.require_atomic();
  if (s.kind() == SemiringClass::Trivial) return true;
  // The length-decreasing move is Down for r < 1 and Up for r > 1.
  const bool want_down_free = (which == Extremum::Min) == s.below_one();
  return want_down_free ? down_free(s, z) : up_free(s, z);
}

std::optional<Factorization> extremal(const Semiring& s, const Factorization& z, Extremum which) {
  s.require_atomic();
  if (s.kind() == SemiringClass::Trivial) return trivial_normal_form(z);
  const bool saturate_with_down = (which == Extremum::Min) == s.below_one();
  if (saturate_with_down) return saturate_down(s, z);
  return saturate_up(s, z);
}

std::optional<std::uint64_t> denominator_exponent(const Semiring& s, const Rational& x) {
  BigInt g = x.denominator();
  std::uint64_t t = 0;
  while (g != 1) {
    BigInt h;
    mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), s.den().get_mpz_t());
    if (h == 1) return std::nullopt;
    g /= h;
    ++t;
  }
  return t;
}

std::optional<std::uint64_t> exponent_bound(const Semiring& s, const Rational& x) {
  auto t = denominator_exponent(s, x);
  if (!t) return std::nullopt;
  return std::max<std::uint64_t>(*t, s.monoid().conductor());
}

namespace {

// Decodes x into the unique factorization with c_i < d^{delta_{i-1}} (i >= 1)
// supported on exponents <= max(t, F(N)+1). Working at scale d^{s_i}, the
// partial value X_i is congruent to c_i n^{s_i} modulo d^{delta_{i-1}}, which
// pins c_i; the remainder must stay nonnegative all the way down.
std::optional<Factorization> decode_down_free(const Semiring& s, const Rational& x) {
  const auto bound = exponent_bound(s, x);
  if (!bound) return std::nullopt;
  const NumericalMonoid& monoid = s.monoid();
  const AtomIndex top = *monoid.index_of(*bound);
  BigInt acc = x.numerator() * big_pow(s.den(), monoid.element(top)) / x.denominator();

  Factorization::Map coeffs;
  for (AtomIndex i = top; i >= 1; --i) {
    const std::uint64_t e = monoid.element(i);
    const BigInt modulus = big_pow(s.den(), e - monoid.element(i - 1));
    const BigInt weight = big_pow(s.num(), e);
    BigInt inverse;
    mpz_invert(inverse.get_mpz_t(), weight.get_mpz_t(), modulus.get_mpz_t());
    BigInt residue = acc % modulus;
    BigInt c = (residue * inverse) % modulus;
    acc -= c * weight;
    if (acc < 0) return std::nullopt;
    acc /= modulus;
    if (c != 0) coeffs[i] = to_multiplicity(c);
  }
  if (acc != 0) coeffs[0] = to_multiplicity(acc);
  return Factorization(std::move(coeffs));
}

}  // namespace

std::optional<Factorization> member(const Semiring& s, const Rational& x) {
  s.require_atomic();
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return Factorization{};
  if (s.kind() == SemiringClass::Trivial) {
    if (!x.is_integer()) return std::nullopt;
    return Factorization{{0, to_multiplicity(x.numerator())}};
  }
  auto z = decode_down_free(s, x);
  if (!z) return std::nullopt;
  // Down-free is the minimum-length form for r < 1 and the maximum-length
  // form for r > 1.
  if (s.below_one()) return z;
  return extremal(s, *z, Extremum::Min);
}

bool divides(const Semiring& s, const Rational& x, const Rational& y) {
  const Rational diff = y - x;
  if (diff.sign() < 0) return false;
  return member(s, diff).has_value();
}

FactorizationSet factorizations(const Semiring& s, const Rational& x, const EnumerationCaps& caps) {
  s.require_atomic();
  FactorizationSet out;
  out.exp_cap = caps.exp_cap;
  out.len_cap = caps.len_cap;
  auto seed = member(s, x);
  if (!seed) {
    out.exact_through = std::numeric_limits<Multiplicity>::max();
    return out;
  }
  if (s.kind() == SemiringClass::Trivial) {
    out.exact_through = seed->length();
    out.items.push_back(std::move(*seed));
    return out;
  }

  const bool capped = s.below_one();
  auto within_caps = [&](const Factorization& z) {
    if (!capped) return true;
    if (!z.empty() && *z.top_index() > caps.exp_cap) return false;
    if (caps.len_cap && z.length() > *caps.len_cap) return false;
    return true;
  };

  bool left_caps = false;
  if (!within_caps(*seed)) {
    out.cap_too_small = true;
    out.complete = false;
    return out;
  }

  // Every factorization reaches the minimum-length one by length-decreasing
  // rewrites, and those never raise an index or a length, so a breadth-first
  // closure under both directions from the seed finds everything in caps.
  std::unordered_set<Factorization> seen{*seed};
  std::deque<Factorization> queue{*seed};
  std::uint64_t expanded = 0;
  const Multiplicity min_length = seed->length();

  auto visit = [&](Factorization next) {
    if (!within_caps(next)) {
      left_caps = true;
      return;
    }
    if (seen.insert(next).second) queue.push_back(std::move(next));
  };

  while (!queue.empty()) {
    if (++expanded > caps.budget) {
      out.budget_exhausted = true;
      break;
    }
    Factorization z = std::move(queue.front());
    queue.pop_front();
    for (const auto& [i, c] : z.coeffs()) {
      const auto up = s.up_cost(i);
      if (up && c >= *up) visit(rewrite(s, z, i, Direction::Up));
      if (i >= 1) {
        const auto down = s.down_cost(i - 1);
        if (down && c >= *down) visit(rewrite(s, z, i - 1, Direction::Down));
      }
    }
  }

  out.items.assign(seen.begin(), seen.end());
  std::sort(out.items.begin(), out.items.end());
  out.complete = !left_caps && !out.budget_exhausted;

  if (out.budget_exhausted) {
    out.exact_through.reset();
  } else if (out.complete) {
    Multiplicity longest = 0;
    for (const auto& z : out.items) longest = std::max(longest, z.length());
    out.exact_through = longest;
  } else {
    // r < 1: a factorization whose top exponent s_k exceeds E = max(t, F+1)
    // has length >= min_length + (s_k - E)(d - n), so everything shorter than
    // the first exponent past exp_cap is inside the exponent cap.
    Multiplicity through = caps.len_cap.value_or(std::numeric_limits<Multiplicity>::max());
    const std::uint64_t bound = *exponent_bound(s, x);
    const std::uint64_t next_exponent = s.monoid().element(caps.exp_cap + 1);
    if (next_exponent <= bound) {
      out.exact_through.reset();
    } else {
      const BigInt step = s.length_step();
      const BigInt reach = BigInt(static_cast<unsigned long>(min_length)) +
                           BigInt(static_cast<unsigned long>(next_exponent - bound)) * step - 1;
      if (reach.fits_ulong_p()) through = std::min<Multiplicity>(through, reach.get_ui());
      out.exact_through = through;
    }
  }
  return out;
}

}  // namespace puiseux
