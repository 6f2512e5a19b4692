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

#include "puiseux/factorization.hpp"

#include <algorithm>
#include <sstream>

#include "puiseux/checked.hpp"
#include "puiseux/errors.hpp"

namespace puiseux {

Factorization::Factorization(std::initializer_list<std::pair<const AtomIndex, Multiplicity>> init) {
  for (const auto& [index, amount] : init) add(index, amount);
}

Factorization::Factorization(Map coeffs) {
  for (const auto& [index, amount] : coeffs) add(index, amount);
}

Multiplicity Factorization::count(AtomIndex index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? 0 : it->second;
}

void Factorization::add(AtomIndex index, Multiplicity amount) {
  if (amount == 0) return;
  auto& slot = coeffs_[index];
  slot = checked_add(slot, amount);
  length_ = checked_add(length_, amount);
}

void Factorization::remove(AtomIndex index, Multiplicity amount) {
  if (amount == 0) return;
  auto it = coeffs_.find(index);
  if (it == coeffs_.end() || it->second < amount) {
    throw Error(ErrorKind::InsufficientCoefficient,
                "atom " + std::to_string(index) + " has multiplicity " +
                    std::to_string(count(index)) + " < " + std::to_string(amount));
  }
  it->second -= amount;
  length_ -= amount;
  if (it->second == 0) coeffs_.erase(it);
}

std::optional<AtomIndex> Factorization::top_index() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [index, amount] : coeffs_) {
    if (!first) out << ", ";
    first = false;
    out << index << ':' << amount;
  }
  out << '}';
  return out.str();
}

Factorization gcd(const Factorization& a, const Factorization& b) {
  Factorization out;
  for (const auto& [index, amount] : a.coeffs()) {
    out.add(index, std::min(amount, b.count(index)));
  }
  return out;
}

Multiplicity distance(const Factorization& a, const Factorization& b) {
  return std::max(a.length(), b.length()) - gcd(a, b).length();
}

bool shares_atom(const Factorization& a, const Factorization& b) {
  auto ia = a.coeffs().begin();
  auto ib = b.coeffs().begin();
  while (ia != a.coeffs().end() && ib != b.coeffs().end()) {
    if (ia->first == ib->first) return true;
    if (ia->first < ib->first) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return false;
}

}  // namespace puiseux

std::size_t std::hash<puiseux::Factorization>::operator()(
    const puiseux::Factorization& z) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [index, amount] : z.coeffs()) {
    h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= amount + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
