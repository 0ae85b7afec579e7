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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdist/numbers.hpp"

namespace qdist {

/// One jump of a staircase: the value becomes `level` strictly after `jump`.
struct Step {
  Rational jump;
  Rational level;

  friend bool operator==(const Step&, const Step&) = default;
};

/// A finite-step distance distribution in canonical form.
///
/// The denoted map [0,inf] -> [0,1] is 0 on [0, jump_1], level_i on
/// (jump_i, jump_{i+1}] and level_n on (jump_n, inf]. Jumps are finite and
/// strictly increasing, levels strictly increasing and positive, so the map
/// vanishes at 0, is monotone, left-continuous, and takes its supremum over
/// finite times at infinity. The empty staircase is the bottom element.
class Staircase {
 public:
  Staircase() = default;

  /// Wraps an already canonical step list. Throws DomainError otherwise.
  static Staircase from_steps(std::vector<Step> steps);

  /// Join of the one-step functions (jump, level) in any order. Levels must
  /// lie in [0,1] and jumps must be non-negative; this is not re-checked.
  static Staircase envelope(std::vector<Step> candidates);

  /// Canonicalises a list that is already sorted by jump with non-decreasing
  /// jumps; drops repeated and non-increasing levels.
  static Staircase from_sorted(std::vector<Step> sorted);

  static Staircase top();

  const std::vector<Step>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  std::size_t size() const noexcept { return steps_.size(); }

  /// Value at infinity: the last level, or 0.
  Rational final_level() const;

  /// Value at the finite time t (left-continuous).
  const Rational& level_at(const Rational& t) const;

  /// Value on (t, t+eps) for small eps: the level of the last jump <= t.
  const Rational& level_after(const Rational& t) const;

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  explicit Staircase(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

/// kappa_{p,a}: 0 up to and including p, then a. Throws DomainError for p = inf.
Staircase one_step(const ExtendedTime& p, const UnitRational& a);

UnitRational eval(const Staircase& phi, const ExtendedTime& t);

Staircase join(const Staircase& phi, const Staircase& psi);
Staircase meet(const Staircase& phi, const Staircase& psi);
bool leq(const Staircase& phi, const Staircase& psi);

/// sup{p in [0,inf] : phi(p) <= a}.
ExtendedTime flat(const Staircase& phi, const UnitRational& a);

/// The one-step functions whose join is phi, one per canonical step.
std::vector<std::pair<ExtendedTime, UnitRational>> decompose_steps(const Staircase& phi);

/// Canonical text `steps[(p1,a1),...,(pn,an)]`.
std::string to_string(const Staircase& phi);

/// Parses the canonical text form. Whitespace and unreduced fractions are
/// accepted; the steps themselves must already satisfy the invariants.
Staircase parse_staircase(std::string_view text);

/// A knot of a monotone step map: its value at `time` and on the open
/// interval up to the next knot.
struct Knot {
  Rational time;
  Rational at;
  Rational after;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/// A monotone map [0,inf] -> [0,1] with finitely many breakpoints and no
/// normalisation: values at breakpoints are free (subject to monotonicity),
/// the value at 0 need not vanish and the value at infinity may exceed the
/// supremum over finite times.
class MonotoneStep {
 public:
  /// Knots must start at time 0, be strictly increasing in time, and carry
  /// monotone values in [0,1]. `infinity_level`, when given, must be at least
  /// the last `after` value. Throws DomainError otherwise.
  static MonotoneStep from_knots(std::vector<Knot> knots,
                                 std::optional<Rational> infinity_level = std::nullopt);

  static MonotoneStep from_staircase(const Staircase& phi);

  const std::vector<Knot>& knots() const noexcept { return knots_; }
  const std::optional<Rational>& infinity_level() const noexcept { return infinity_level_; }

  Rational value_at_infinity() const;
  Rational eval(const ExtendedTime& t) const;

  /// Same map with redundant knots removed.
  MonotoneStep simplified() const;

  friend bool operator==(const MonotoneStep&, const MonotoneStep&) = default;

 private:
  MonotoneStep() = default;

  std::vector<Knot> knots_;
  std::optional<Rational> infinity_level_;
};

/// phi^-(t) = sup_{s<t} phi(s): the largest distance distribution below m.
Staircase regularize(const MonotoneStep& m);

}  // namespace qdist
