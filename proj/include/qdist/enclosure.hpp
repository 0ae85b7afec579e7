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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdist/numbers.hpp"
#include "qdist/staircase.hpp"
#include "qdist/tnorm.hpp"

namespace qdist {

struct LinearKnot {
  Rational time;
  Rational value;

  friend bool operator==(const LinearKnot&, const LinearKnot&) = default;
};

/// Continuous distance distribution interpolating linearly between knots and
/// constant after the last one. The first knot is (0,0).
class PiecewiseLinearDistribution {
 public:
  /// Throws DomainError unless the knots start at (0,0), have strictly
  /// increasing times and non-decreasing values in [0,1].
  static PiecewiseLinearDistribution from_knots(std::vector<LinearKnot> knots);

  const std::vector<LinearKnot>& knots() const noexcept { return knots_; }

  Rational eval(const ExtendedTime& t) const;

  friend bool operator==(const PiecewiseLinearDistribution&,
                         const PiecewiseLinearDistribution&) = default;

 private:
  PiecewiseLinearDistribution() = default;

  std::vector<LinearKnot> knots_;
};

/// `linear[(t0,v0),(t1,v1),...]`.
PiecewiseLinearDistribution parse_linear(std::string_view text);
std::string to_string(const PiecewiseLinearDistribution& f);

/// A pair of staircases with lower <= upper bracketing some distribution.
class Enclosure {
 public:
  /// Throws DomainError unless leq(lower, upper).
  Enclosure(Staircase lower, Staircase upper);

  /// The degenerate enclosure of an exact staircase.
  static Enclosure exact(Staircase phi);

  const Staircase& lower() const noexcept { return lower_; }
  const Staircase& upper() const noexcept { return upper_; }

 private:
  Staircase lower_;
  Staircase upper_;
};

/// Splits every linear segment into n equal left-open right-closed cells and
/// samples f at the left end (lower) and right end (upper) of each cell.
/// Throws DomainError for n == 0.
Enclosure bracket(const PiecewiseLinearDistribution& f, unsigned n);

/// [lower1 (x) lower2, upper1 (x) upper2], sound by monotonicity of (x).
Enclosure bound_convolve(const TNormSpec& t, const Enclosure& e1, const Enclosure& e2);

struct NonDivisibilityCertificate {
  ExtendedTime witness;
  /// xi(witness) minus a certified upper bound of (f (x) (f => xi))(witness).
  Rational gap;
};

/// Upper bound of f (x) (f => xi) at resolution n:
/// upper(f) (x) (lower(f) => xi), using that => is antitone in its first slot.
Staircase certified_residual_bound(const TNormSpec& t, const PiecewiseLinearDistribution& f,
                                   const Staircase& xi, unsigned n);

/// Looks for a time where the certified upper bound of f (x) (f => xi) falls
/// strictly below xi; such a time proves xi is not divisible by f. Probes the
/// right end of every cell of the joint partition and one point past the last
/// jump. Returns the probe with the largest gap, earliest first on ties, or
/// nothing when the resolution is inconclusive.
std::optional<NonDivisibilityCertificate> certify_not_divisible(
    const TNormSpec& t, const PiecewiseLinearDistribution& f, const Staircase& xi, unsigned n);

/// Exact counterpart for a staircase phi: compares phi (x) (phi => xi) with xi
/// on the same probes. A result means xi is not divisible by phi.
std::optional<NonDivisibilityCertificate> certify_not_divisible_exact(const TNormSpec& t,
                                                                       const Staircase& phi,
                                                                       const Staircase& xi);

/// Same, restricted to the given probe times.
std::optional<NonDivisibilityCertificate> certify_not_divisible(
    const TNormSpec& t, const PiecewiseLinearDistribution& f, const Staircase& xi, unsigned n,
    std::span<const ExtendedTime> probes);

}  // namespace qdist
