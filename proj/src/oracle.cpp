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

#include "puiseux/oracle.hpp"

#include <algorithm>
#include <functional>

#include "puiseux/errors.hpp"

namespace puiseux::oracle {

KnapsackInstance integerize(const Semiring& s, const Rational& x, std::span<const AtomIndex> window,
                            std::span<const std::optional<Multiplicity>> bounds) {
  s.require_nontrivial_atomic();
  if (window.empty()) throw Error(ErrorKind::InvalidArgument, "empty atom window");
  if (!bounds.empty() && bounds.size() != window.size()) {
    throw Error(ErrorKind::InvalidArgument, "bounds and window differ in size");
  }
  KnapsackInstance out;
  out.window.assign(window.begin(), window.end());
  out.bounds.assign(bounds.begin(), bounds.end());
  if (out.bounds.empty()) out.bounds.resize(window.size());
  const std::uint64_t top = s.monoid().element(*std::max_element(window.begin(), window.end()));
  for (AtomIndex i : window) {
    const std::uint64_t e = s.monoid().element(i);
    out.weights.push_back(big_pow(s.num(), e) * big_pow(s.den(), top - e));
  }
  const BigInt scaled = x.numerator() * big_pow(s.den(), top);
  out.integral = mpz_divisible_p(scaled.get_mpz_t(), x.denominator().get_mpz_t()) != 0;
  out.target = out.integral ? BigInt(scaled / x.denominator()) : BigInt(0);
  return out;
}

Representations representations(const Semiring& s, const Rational& x,
                                 std::span<const AtomIndex> window,
                                 std::span<const std::optional<Multiplicity>> bounds,
                                 std::uint64_t budget) {
  Representations out;
  if (x.sign() < 0) return out;
  if (x.is_zero()) {
    out.items.emplace_back();
    return out;
  }
  const KnapsackInstance inst = integerize(s, x, window, bounds);
  if (!inst.integral) return out;

  // Visit atoms by decreasing index; gcd_below[p] is the gcd of the weights
  // after position p and must divide whatever is left to cover.
  const std::size_t n = inst.window.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return inst.window[a] > inst.window[b]; });
  std::vector<BigInt> gcd_below(n, 0);
  for (std::size_t p = n - 1; p-- > 0;) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), gcd_below[p + 1].get_mpz_t(), inst.weights[order[p + 1]].get_mpz_t());
    gcd_below[p] = g;
  }

  std::vector<Multiplicity> coeff(n, 0);
  std::uint64_t nodes = 0;

  std::function<void(std::size_t, const BigInt&)> search = [&](std::size_t p, const BigInt& rest) {
    if (out.partial) return;
    const std::size_t slot = order[p];
    const BigInt& w = inst.weights[slot];
    BigInt most = rest / w;
    if (inst.bounds[slot] && most > BigInt(static_cast<unsigned long>(*inst.bounds[slot]))) {
      most = BigInt(static_cast<unsigned long>(*inst.bounds[slot]));
    }
    if (p + 1 == n) {
      ++nodes;
      if (rest % w == 0 && rest / w <= most) {
        coeff[slot] = BigInt(rest / w).get_ui();
        Factorization z;
        for (std::size_t i = 0; i < n; ++i) z.add(inst.window[i], coeff[i]);
        out.items.push_back(std::move(z));
        coeff[slot] = 0;
      }
      return;
    }
    const unsigned long limit = most.fits_ulong_p() ? most.get_ui() : ~0UL;
    BigInt left = rest;
    for (unsigned long c = 0; c <= limit; ++c) {
      if (++nodes > budget) {
        out.partial = true;
        return;
      }
      if (left % gcd_below[p] == 0) {
        coeff[slot] = c;
        search(p + 1, left);
        if (out.partial) return;
      }
      left -= w;
    }
    coeff[slot] = 0;
  };
  search(0, inst.target);
  std::sort(out.items.begin(), out.items.end());
  return out;
}

std::vector<AtomIndex> value_window(const Semiring& s, const Rational& x) {
  s.require_nontrivial_atomic();
  if (s.below_one()) throw Error(ErrorKind::InvalidArgument, "value window needs r > 1");
  std::vector<AtomIndex> out{0};
  for (AtomIndex k = 1; s.atom(k) <= x; ++k) out.push_back(k);
  return out;
}

std::vector<AtomIndex> exponent_window(const Semiring& s, std::uint64_t max_exponent) {
  std::vector<AtomIndex> out;
  for (AtomIndex k = 0; s.monoid().element(k) <= max_exponent; ++k) out.push_back(k);
  return out;
}

std::vector<std::optional<Multiplicity>> down_free_bounds(const Semiring& s,
                                                          std::span<const AtomIndex> window) {
  std::vector<std::optional<Multiplicity>> out;
  for (AtomIndex i : window) {
    if (i == 0) {
      out.emplace_back();
      continue;
    }
    const auto cost = s.down_cost(i - 1);
    out.push_back(cost ? std::optional<Multiplicity>(*cost - 1) : std::nullopt);
  }
  return out;
}

std::optional<bool> is_member(const Semiring& s, const Rational& x, std::uint64_t slack,
                              std::uint64_t budget) {
  s.require_nontrivial_atomic();
  if (x.sign() < 0) return false;
  if (x.is_zero()) return true;
  const auto bound = exponent_bound(s, x);
  if (!bound) return false;
  const auto window = exponent_window(s, *bound + slack);
  const auto caps = down_free_bounds(s, window);
  const Representations reps = representations(s, x, window, caps, budget);
  if (!reps.items.empty()) return true;
  if (reps.partial) return std::nullopt;
  return false;
}

Representations minimal_bouquets(const Semiring& s, AtomIndex atom_index, Multiplicity size_cap,
                                 AtomIndex exp_cap, std::uint64_t budget) {
  s.require_nontrivial_atomic();
  Representations out;
  const Rational a = s.atom(atom_index);
  std::vector<Rational> atoms;
  for (AtomIndex k = 0; k <= exp_cap; ++k) atoms.push_back(s.atom(k));

  std::uint64_t nodes = 0;
  Factorization z;
  Rational value(0);
  // Nondecreasing index sequences enumerate each multiset once.
  std::function<void(AtomIndex)> grow = [&](AtomIndex from) {
    for (AtomIndex k = from; k <= exp_cap; ++k) {
      if (++nodes > budget) {
        out.partial = true;
        return;
      }
      z.add(k, 1);
      value += atoms[k];
      if (divides(s, a, value)) {
        bool minimal = true;
        for (const auto& [i, c] : z.coeffs()) {
          if (divides(s, a, value - atoms[i])) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.items.push_back(z);
      }
      if (z.length() < size_cap) grow(k);
      z.remove(k, 1);
      value -= atoms[k];
      if (out.partial) return;
    }
  };
  grow(0);
  std::sort(out.items.begin(), out.items.end());
  return out;
}

}  // namespace puiseux::oracle
