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

#ifndef PUISEUX_SERIALIZE_HPP
#define PUISEUX_SERIALIZE_HPP

// JSON forms of every result record. Rationals and big integers travel as
// decimal strings so nothing is ever rounded; from_json inverts to_json
// exactly.

#include <json.hpp>

#include "puiseux/factorization.hpp"
#include "puiseux/invariants.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/semiring.hpp"

namespace puiseux {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

void to_json(Json& j, const Rational& q);
void from_json(const Json& j, Rational& q);

void to_json(Json& j, const Factorization& z);
void from_json(const Json& j, Factorization& z);

void to_json(Json& j, const EnumerationCaps& caps);
void from_json(const Json& j, EnumerationCaps& caps);

void to_json(Json& j, const FactorizationSet& set);
void from_json(const Json& j, FactorizationSet& set);

void to_json(Json& j, const LengthSet& set);
void from_json(const Json& j, LengthSet& set);

void to_json(Json& j, const AapStructure& aap);
void from_json(const Json& j, AapStructure& aap);

void to_json(Json& j, const BettiElement& b);
void from_json(const Json& j, BettiElement& b);

void to_json(Json& j, const RClassPartition& p);
void from_json(const Json& j, RClassPartition& p);

void to_json(Json& j, const CatenaryResult& c);
void from_json(const Json& j, CatenaryResult& c);

void to_json(Json& j, const DistanceWitness& w);
void from_json(const Json& j, DistanceWitness& w);

void to_json(Json& j, const DeltaReport& r);
void from_json(const Json& j, DeltaReport& r);

void to_json(Json& j, const UnionWindow& u);
void from_json(const Json& j, UnionWindow& u);

void to_json(Json& j, const OmegaResult& r);
void from_json(const Json& j, OmegaResult& r);

void to_json(Json& j, const Classification& c);
void from_json(const Json& j, Classification& c);

/// null for unbounded.
Json elasticity_to_json(const Elasticity& e);
Elasticity elasticity_from_json(const Json& j);

}  // namespace puiseux

#endif  // PUISEUX_SERIALIZE_HPP
