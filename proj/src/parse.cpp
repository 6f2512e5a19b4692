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

#include "puiseux/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }
  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  BigInt natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a natural number", start);
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }
  std::uint64_t small_natural() {
    const std::size_t start = (skip_space(), pos_);
    const BigInt v = natural();
    if (!v.fits_ulong_p()) throw ParseError("number too large", start);
    return v.get_ui();
  }
  std::vector<std::uint64_t> list() {
    std::vector<std::uint64_t> out{small_natural()};
    while (accept(",")) out.push_back(small_natural());
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NumericalMonoid parse_monoid(std::string_view text) {
  Cursor in(text);
  if (in.accept("naturals")) {
    if (!in.done()) throw ParseError("unexpected trailing text", in.pos());
    return NumericalMonoid::naturals();
  }
  if (in.accept("gens:")) {
    const auto gens = in.list();
    if (!in.done()) throw ParseError("unexpected trailing text", in.pos());
    return NumericalMonoid::from_generators(gens);
  }
  if (in.accept("elems:")) {
    const auto elements = in.list();
    in.expect(";");
    in.expect("cond:");
    const auto conductor = in.small_natural();
    if (!in.done()) throw ParseError("unexpected trailing text", in.pos());
    return NumericalMonoid::from_small_elements(elements, conductor);
  }
  throw ParseError("expected 'gens:', 'elems:' or 'naturals'", in.pos());
}

Rational parse_element(const Semiring& s, std::string_view text) {
  if (text.find('r') == std::string_view::npos) return Rational::parse(text);
  Cursor in(text);
  Rational total(0);
  do {
    BigInt coefficient = 1;
    std::uint64_t exponent = 0;
    std::size_t exponent_at = in.pos();
    const bool leading = in.at_digit();
    if (leading) coefficient = in.natural();
    const bool times = leading ? in.accept("*") : false;
    if (!leading || times) {
      in.expect("r");
      exponent = 1;
      if (in.accept("^")) {
        exponent_at = in.pos();
        exponent = in.small_natural();
      }
    }
    if (!s.monoid().contains(exponent)) {
      throw ParseError("exponent " + std::to_string(exponent) + " is not in the monoid",
                       exponent_at);
    }
    total += Rational(coefficient) * s.base().pow(exponent);
  } while (in.accept("+"));
  if (!in.done()) throw ParseError("unexpected character", in.pos());
  return total;
}

}  // namespace puiseux
