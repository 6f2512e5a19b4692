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

#include "puiseux/numonoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "puiseux/errors.hpp"

namespace puiseux {

NumericalMonoid::NumericalMonoid(std::vector<std::uint64_t> below, std::uint64_t conductor)
    : below_(std::move(below)), table_(conductor, false), conductor_(conductor) {
  for (auto v : below_) table_[v] = true;

  // Minimal generators are the nonzero members that are not a sum of two
  // nonzero members; all of them lie below conductor + multiplicity.
  std::uint64_t mult = 1;
  if (conductor_ > 0) {
    mult = below_.size() > 1 ? below_[1] : conductor_;
  }
  const std::uint64_t limit = conductor_ + mult + 1;
  for (std::uint64_t x = 1; x < limit; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (std::uint64_t y = 1; y <= x / 2 && !decomposable; ++y) {
      decomposable = contains(y) && contains(x - y);
    }
    if (!decomposable) min_generators_.push_back(x);
  }
}

NumericalMonoid NumericalMonoid::naturals() { return NumericalMonoid({}, 0); }

NumericalMonoid NumericalMonoid::from_generators(std::span<const std::uint64_t> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list");
  std::uint64_t g = 0;
  for (auto a : gens) {
    if (a == 0) throw Error(ErrorKind::InvalidArgument, "generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw Error(ErrorKind::NotCofinite,
                "generators have gcd " + std::to_string(g) + "; complement is infinite");
  }
  const std::uint64_t smallest = *std::min_element(gens.begin(), gens.end());

  // Sieve until a run of 'smallest' consecutive members appears; from there on
  // every integer is a member.
  std::vector<bool> member{true};
  std::uint64_t run = 1;
  std::uint64_t k = 0;
  while (run < smallest) {
    ++k;
    bool in = false;
    for (auto a : gens) {
      if (a <= k && member[k - a]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  // The run ends at k and has length 'smallest', so it starts at k - smallest + 1.
  const std::uint64_t conductor = k + 1 - smallest;
  std::vector<std::uint64_t> below;
  for (std::uint64_t v = 0; v < conductor; ++v) {
    if (member[v]) below.push_back(v);
  }
  return NumericalMonoid(std::move(below), conductor);
}

NumericalMonoid NumericalMonoid::from_small_elements(std::span<const std::uint64_t> elements,
                                                     std::uint64_t conductor) {
  std::vector<std::uint64_t> elems(elements.begin(), elements.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems.front() != 0) {
    throw Error(ErrorKind::NotAMonoid, "element list must contain 0");
  }
  if (conductor == 0) {
    if (elems.size() != 1) {
      throw Error(ErrorKind::InvalidArgument, "conductor 0 admits only the element list {0}");
    }
    return naturals();
  }
  if (elems.back() >= conductor) {
    throw Error(ErrorKind::InvalidArgument,
                "element " + std::to_string(elems.back()) + " is not below the conductor");
  }
  std::vector<bool> member(conductor, false);
  for (auto v : elems) member[v] = true;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      const std::uint64_t sum = elems[i] + elems[j];
      if (sum >= conductor) break;
      if (!member[sum]) {
        throw Error(ErrorKind::NotClosed, std::to_string(elems[i]) + " + " +
                                              std::to_string(elems[j]) + " = " +
                                              std::to_string(sum) + " is missing");
      }
    }
  }
  // Shrink to the true conductor: drop a trailing run of listed members.
  std::uint64_t true_conductor = conductor;
  while (true_conductor > 0 && member[true_conductor - 1]) --true_conductor;
  std::vector<std::uint64_t> below;
  for (auto v : elems) {
    if (v < true_conductor) below.push_back(v);
  }
  return NumericalMonoid(std::move(below), true_conductor);
}

std::vector<std::uint64_t> NumericalMonoid::small_elements() const {
  std::vector<std::uint64_t> out = below_;
  out.push_back(conductor_);
  return out;
}

bool NumericalMonoid::contains(std::uint64_t k) const {
  return k >= conductor_ || table_[k];
}

std::uint64_t NumericalMonoid::element(std::uint64_t n) const {
  if (n < below_.size()) return below_[n];
  return conductor_ + (n - below_.size());
}

std::optional<std::uint64_t> NumericalMonoid::index_of(std::uint64_t value) const {
  if (value >= conductor_) return below_.size() + (value - conductor_);
  auto it = std::lower_bound(below_.begin(), below_.end(), value);
  if (it == below_.end() || *it != value) return std::nullopt;
  return static_cast<std::uint64_t>(it - below_.begin());
}

std::string NumericalMonoid::to_string() const {
  std::ostringstream out;
  out << "gens:";
  for (std::size_t i = 0; i < min_generators_.size(); ++i) {
    if (i) out << ',';
    out << min_generators_[i];
  }
  return out.str();
}

}  // namespace puiseux
