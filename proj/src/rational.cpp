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

#include "puiseux/rational.hpp"

#include <cctype>

#include "puiseux/errors.hpp"

namespace puiseux {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCofinite: return "NotCofinite";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAMonoid: return "NotAMonoid";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::InsufficientCoefficient: return "InsufficientCoefficient";
    case ErrorKind::MixedResidues: return "MixedResidues";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator");
  }
  value_.canonicalize();
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t num_end = scan_digits(text, pos);
  if (num_end == pos) throw ParseError("expected digits", pos);
  BigInt num(std::string(text.substr(pos, num_end - pos)), 10);
  if (negative) num = -num;
  BigInt den = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_end = scan_digits(text, pos);
    if (den_end == pos) throw ParseError("expected denominator digits", pos);
    den = BigInt(std::string(text.substr(pos, den_end - pos)), 10);
    if (den == 0) throw ParseError("zero denominator", pos);
    pos = den_end;
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return Rational(num, den);
}

Rational Rational::pow(std::uint64_t exponent) const {
  return Rational(big_pow(value_.get_num(), exponent), big_pow(value_.get_den(), exponent));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace puiseux

std::size_t std::hash<puiseux::Rational>::operator()(const puiseux::Rational& q) const noexcept {
  const std::size_t a = std::hash<std::string>{}(q.raw().get_num().get_str(16));
  const std::size_t b = std::hash<std::string>{}(q.raw().get_den().get_str(16));
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}
