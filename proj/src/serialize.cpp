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

#include "puiseux/serialize.hpp"

#include <string>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

OmegaStatus omega_status_from(const std::string& text) {
  for (auto s : {OmegaStatus::Finite, OmegaStatus::Infinite, OmegaStatus::BoundedEstimate}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorKind::Parse, "unknown omega status '" + text + "'");
}

}  // namespace

Json big_to_json(const BigInt& v) { return v.get_str(); }

BigInt big_from_json(const Json& j) { return BigInt(j.get<std::string>(), 10); }

void to_json(Json& j, const Rational& q) {
  j = Json{{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

void from_json(const Json& j, Rational& q) {
  q = Rational(big_from_json(j.at("num")), big_from_json(j.at("den")));
}

void to_json(Json& j, const Factorization& z) {
  j = Json::array();
  for (const auto& [i, c] : z.coeffs()) j.push_back(Json::array({i, c}));
}

void from_json(const Json& j, Factorization& z) {
  Factorization out;
  for (const auto& pair : j) out.add(pair.at(0).get<AtomIndex>(), pair.at(1).get<Multiplicity>());
  z = std::move(out);
}

void to_json(Json& j, const EnumerationCaps& caps) {
  j = Json{{"exp_cap", caps.exp_cap},
           {"len_cap", optional_to_json(caps.len_cap)},
           {"budget", caps.budget}};
}

void from_json(const Json& j, EnumerationCaps& caps) {
  caps.exp_cap = j.at("exp_cap").get<AtomIndex>();
  caps.len_cap = optional_from_json<Multiplicity>(j.at("len_cap"));
  caps.budget = j.at("budget").get<std::uint64_t>();
}

void to_json(Json& j, const FactorizationSet& set) {
  j = Json{{"factorizations", set.items},
           {"complete", set.complete},
           {"exp_cap", set.exp_cap},
           {"len_cap", optional_to_json(set.len_cap)},
           {"cap_too_small", set.cap_too_small},
           {"budget_exhausted", set.budget_exhausted},
           {"exact_through", optional_to_json(set.exact_through)}};
}

void from_json(const Json& j, FactorizationSet& set) {
  set.items = j.at("factorizations").get<std::vector<Factorization>>();
  set.complete = j.at("complete").get<bool>();
  set.exp_cap = j.at("exp_cap").get<AtomIndex>();
  set.len_cap = optional_from_json<Multiplicity>(j.at("len_cap"));
  set.cap_too_small = j.at("cap_too_small").get<bool>();
  set.budget_exhausted = j.at("budget_exhausted").get<bool>();
  set.exact_through = optional_from_json<Multiplicity>(j.at("exact_through"));
}

void to_json(Json& j, const LengthSet& set) {
  j = Json{{"lengths", set.lengths},
           {"member", set.member},
           {"complete", set.complete},
           {"exp_cap", set.exp_cap},
           {"len_cap", optional_to_json(set.len_cap)},
           {"exact_through", optional_to_json(set.exact_through)}};
}

void from_json(const Json& j, LengthSet& set) {
  set.lengths = j.at("lengths").get<std::vector<Multiplicity>>();
  set.member = j.at("member").get<bool>();
  set.complete = j.at("complete").get<bool>();
  set.exp_cap = j.at("exp_cap").get<AtomIndex>();
  set.len_cap = optional_from_json<Multiplicity>(j.at("len_cap"));
  set.exact_through = optional_from_json<Multiplicity>(j.at("exact_through"));
}

void to_json(Json& j, const AapStructure& aap) {
  j = Json{{"y", aap.y},       {"d", aap.d},       {"core", aap.core()},
           {"head", aap.head}, {"tail", aap.tail}, {"bound", aap.bound}};
}

void from_json(const Json& j, AapStructure& aap) {
  aap.y = j.at("y").get<std::int64_t>();
  aap.d = j.at("d").get<std::uint64_t>();
  aap.core_size = j.at("core").size();
  aap.head = j.at("head").get<std::vector<std::int64_t>>();
  aap.tail = j.at("tail").get<std::vector<std::int64_t>>();
  aap.bound = j.at("bound").get<std::uint64_t>();
}

void to_json(Json& j, const BettiElement& b) {
  j = Json{{"index", b.index}, {"multiplicity", big_to_json(b.multiplicity)}, {"element", b.element}};
}

void from_json(const Json& j, BettiElement& b) {
  b.index = j.at("index").get<AtomIndex>();
  b.multiplicity = big_from_json(j.at("multiplicity"));
  b.element = j.at("element").get<Rational>();
}

void to_json(Json& j, const RClassPartition& p) {
  j = Json{{"classes", p.classes}, {"count", p.classes.size()}, {"complete", p.complete}};
}

void from_json(const Json& j, RClassPartition& p) {
  p.classes = j.at("classes").get<std::vector<std::vector<Factorization>>>();
  p.complete = j.at("complete").get<bool>();
}

void to_json(Json& j, const CatenaryResult& c) {
  j = Json{{"value", c.value}, {"exact", c.exact}};
}

void from_json(const Json& j, CatenaryResult& c) {
  c.value = j.at("value").get<Multiplicity>();
  c.exact = j.at("exact").get<bool>();
}

void to_json(Json& j, const DistanceWitness& w) {
  j = Json{{"element", w.element},
           {"distance", big_to_json(w.distance)},
           {"found", w.found},
           {"attained", w.attained}};
}

void from_json(const Json& j, DistanceWitness& w) {
  w.element = j.at("element").get<Rational>();
  w.distance = big_from_json(j.at("distance"));
  w.found = j.at("found").get<std::set<Multiplicity>>();
  w.attained = j.at("attained").get<bool>();
}

void to_json(Json& j, const DeltaReport& r) {
  Json family = Json::array();
  for (const auto& v : r.lower_family) family.push_back(big_to_json(v));
  j = Json{{"proven", r.proven},
           {"lower_family", family},
           {"interval", Json::array({big_to_json(r.interval_low), big_to_json(r.interval_high)})},
           {"min_witness", r.min_witness},
           {"max_witness", r.max_witness},
           {"elements_examined", r.elements_examined},
           {"incomplete_elements", r.incomplete_elements},
           {"within_interval", r.within_interval()},
           {"lower_family_proven", r.lower_family_proven()}};
}

void from_json(const Json& j, DeltaReport& r) {
  r.proven = j.at("proven").get<std::set<Multiplicity>>();
  r.lower_family.clear();
  for (const auto& v : j.at("lower_family")) r.lower_family.insert(big_from_json(v));
  r.interval_low = big_from_json(j.at("interval").at(0));
  r.interval_high = big_from_json(j.at("interval").at(1));
  r.min_witness = j.at("min_witness").get<DistanceWitness>();
  r.max_witness = j.at("max_witness").get<DistanceWitness>();
  r.elements_examined = j.at("elements_examined").get<std::uint64_t>();
  r.incomplete_elements = j.at("incomplete_elements").get<std::uint64_t>();
}

void to_json(Json& j, const UnionWindow& u) {
  j = Json{{"lengths", u.lengths},
           {"claimed_difference", big_to_json(u.claimed_difference)},
           {"elements", u.elements},
           {"exact_through", optional_to_json(u.exact_through)}};
}

void from_json(const Json& j, UnionWindow& u) {
  u.lengths = j.at("lengths").get<std::vector<Multiplicity>>();
  u.claimed_difference = big_from_json(j.at("claimed_difference"));
  u.elements = j.at("elements").get<std::uint64_t>();
  u.exact_through = optional_from_json<Multiplicity>(j.at("exact_through"));
}

void to_json(Json& j, const OmegaResult& r) {
  j = Json{{"status", std::string(to_string(r.status))},
           {"lower", r.lower},
           {"upper", r.upper ? big_to_json(*r.upper) : Json(nullptr)},
           {"exp_cap", r.exp_cap},
           {"size_cap", r.size_cap},
           {"witnesses", r.witnesses},
           {"budget_exhausted", r.budget_exhausted}};
}

void from_json(const Json& j, OmegaResult& r) {
  r.status = omega_status_from(j.at("status").get<std::string>());
  r.lower = j.at("lower").get<Multiplicity>();
  r.upper = j.at("upper").is_null() ? std::nullopt
                                    : std::optional<BigInt>(big_from_json(j.at("upper")));
  r.exp_cap = j.at("exp_cap").get<AtomIndex>();
  r.size_cap = j.at("size_cap").get<Multiplicity>();
  r.witnesses = j.at("witnesses").get<std::vector<Factorization>>();
  r.budget_exhausted = j.at("budget_exhausted").get<bool>();
}

void to_json(Json& j, const Classification& c) {
  j = Json{{"atomic", c.atomic},
           {"accp", c.accp},
           {"ffm_known", c.ffm_known},
           {"locally_tame", c.locally_tame},
           {"globally_tame", c.globally_tame},
           {"accp_presentable", c.accp_presentable}};
}

void from_json(const Json& j, Classification& c) {
  c.atomic = j.at("atomic").get<bool>();
  c.accp = j.at("accp").get<bool>();
  c.ffm_known = j.at("ffm_known").get<bool>();
  c.locally_tame = j.at("locally_tame").get<bool>();
  c.globally_tame = j.at("globally_tame").get<bool>();
  c.accp_presentable = j.at("accp_presentable").get<bool>();
}

Json elasticity_to_json(const Elasticity& e) { return e ? Json(*e) : Json(nullptr); }

Elasticity elasticity_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Rational>();
}

}  // namespace puiseux
