// Copyright 2026 The qdist Authors
//
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

#include "qdist/numbers.hpp"

#include <cctype>

#include "qdist/errors.hpp"

namespace qdist {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  }
  Rational r;
  r.get_num() = mpz_class(std::string(num));
  r.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (r.get_den() == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
  }
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str();
}

UnitRational::UnitRational(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) {
    throw DomainError("value " + value_.get_str() + " lies outside [0,1]");
  }
}

UnitRational UnitRational::one() { return UnitRational(Rational(1)); }

UnitRational parse_unit(std::string_view text) {
  return UnitRational(parse_rational(text));
}

std::string to_string(const UnitRational& value) { return to_string(value.value()); }

ExtendedTime::ExtendedTime(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0) {
    throw DomainError("time " + value_.get_str() + " is negative");
  }
}

const Rational& ExtendedTime::finite_value() const {
  if (infinite_) throw DomainError("infinite time has no finite value");
  return value_;
}

ExtendedTime operator+(const ExtendedTime& a, const ExtendedTime& b) {
  if (a.infinite_ || b.infinite_) return ExtendedTime::infinity();
  return ExtendedTime(Rational(a.value_ + b.value_));
}

ExtendedTime operator-(const ExtendedTime& a, const ExtendedTime& b) {
  if (a.infinite_) {
    return b.infinite_ ? ExtendedTime() : ExtendedTime::infinity();
  }
  if (b.infinite_ || a.value_ < b.value_) {
    throw DomainError("negative difference " + to_string(a) + " - " + to_string(b));
  }
  return ExtendedTime(Rational(a.value_ - b.value_));
}

ExtendedTime truncated_difference(const ExtendedTime& q, const ExtendedTime& p) {
  if (p >= q) return ExtendedTime();
  return q - p;
}

ExtendedTime parse_time(std::string_view text) {
  if (text == "inf") return ExtendedTime::infinity();
  return ExtendedTime(parse_rational(text));
}

std::string to_string(const ExtendedTime& value) {
  return value.is_infinite() ? std::string("inf") : to_string(value.finite_value());
}

}  // namespace qdist
