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

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qdist {

/// Exact rational backed by GMP. Values are always kept canonical.
using Rational = mpq_class;

/// Parses `n`, `-n` or `n/d` into a canonical rational.
Rational parse_rational(std::string_view text);

/// `n` for integers, `n/d` otherwise, always reduced.
std::string to_string(const Rational& value);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  return cmp(a, b) <=> 0;
}

/// An exact rational in [0,1]; the value axis of distributions and t-norms.
class UnitRational {
 public:
  UnitRational() = default;

  /// Throws DomainError unless 0 <= value <= 1.
  explicit UnitRational(Rational value);

  static UnitRational zero() { return UnitRational(); }
  static UnitRational one();

  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const UnitRational& a, const UnitRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const UnitRational& a,
                                          const UnitRational& b) {
    return compare(a.value_, b.value_);
  }

 private:
  Rational value_{0};
};

UnitRational parse_unit(std::string_view text);
std::string to_string(const UnitRational& value);

/// A point of [0,inf]: a non-negative rational or infinity.
///
/// Addition absorbs infinity. Subtraction follows the extended convention
/// inf - p = inf for finite p and inf - inf = 0.
class ExtendedTime {
 public:
  ExtendedTime() = default;

  /// Throws DomainError for negative values.
  explicit ExtendedTime(Rational value);

  static ExtendedTime infinity() {
    ExtendedTime t;
    t.infinite_ = true;
    return t;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Throws DomainError when called on infinity.
  const Rational& finite_value() const;

  friend ExtendedTime operator+(const ExtendedTime& a, const ExtendedTime& b);

  /// a - b under the extended convention. Throws DomainError when the
  /// result would be negative (finite a < b, or finite a with b = inf).
  friend ExtendedTime operator-(const ExtendedTime& a, const ExtendedTime& b);

  friend bool operator==(const ExtendedTime& a, const ExtendedTime& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedTime& a,
                                          const ExtendedTime& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return compare(a.value_, b.value_);
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// Implication of Lawvere's quantale [0,inf]_+: 0 when p >= q, else q - p.
ExtendedTime truncated_difference(const ExtendedTime& q, const ExtendedTime& p);

/// Accepts `inf` and any rational accepted by parse_rational.
ExtendedTime parse_time(std::string_view text);
std::string to_string(const ExtendedTime& value);

}  // namespace qdist
