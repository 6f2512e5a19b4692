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

#ifndef PUISEUX_PARSE_HPP
#define PUISEUX_PARSE_HPP

#include <string_view>

#include "puiseux/numonoid.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/semiring.hpp"

namespace puiseux {

/// `gens:a,b,...`, `elems:a,b,...;cond:c` or `naturals`. Throws ParseError
/// for malformed text and the numonoid errors for well-formed but invalid
/// input.
NumericalMonoid parse_monoid(std::string_view text);

/// Either a rational literal or a sum of terms `c*r^e`, `r^e`, `c*r`, `r`
/// or `c` (meaning c*r^0). Every exponent must lie in N.
Rational parse_element(const Semiring& s, std::string_view text);

}  // namespace puiseux

#endif  // PUISEUX_PARSE_HPP
