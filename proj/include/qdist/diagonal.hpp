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

#include <cstdint>
#include <optional>

#include "qdist/numbers.hpp"
#include "qdist/staircase.hpp"
#include "qdist/tnorm.hpp"

namespace qdist {

/// The fixed-point data behind a divisibility decision.
struct DivisibilityReport {
  bool divisible = false;
  Staircase quotient;  ///< phi => xi
  Staircase residual;  ///< phi (x) (phi => xi); equals xi iff divisible
};

DivisibilityReport divisibility(const TNormSpec& t, const Staircase& xi, const Staircase& phi);

/// xi = phi (x) psi for some distribution psi, decided as xi = phi (x) (phi => xi).
bool is_divisible_by(const TNormSpec& t, const Staircase& xi, const Staircase& phi);

/// xi is divisible by both phi and psi.
bool is_diagonal_between(const TNormSpec& t, const Staircase& xi, const Staircase& phi,
                         const Staircase& psi);

/// Composite e <> d of diagonals d into `mid` and e out of `mid`:
/// (mid => e) (x) d, which must agree with e (x) (mid => d).
///
/// Throws PreconditionError naming the failing divisibility when d or e is
/// not divisible by mid.
Staircase diagonal_compose(const TNormSpec& t, const Staircase& e, const Staircase& d,
                           const Staircase& mid);

struct FlatCriterion {
  bool holds = false;
  /// A psi with xi^flat = phi^flat + psi^flat, when one exists.
  std::optional<Staircase> witness;
};

/// Minimum t-norm only: is there a psi with xi^flat = phi^flat + psi^flat?
/// Decided on the finite level set where all flat maps can change.
FlatCriterion flat_criterion_min_detail(const Staircase& xi, const Staircase& phi);
bool flat_criterion_min(const Staircase& xi, const Staircase& phi);

enum class NondiagonalOutcome {
  OneStep,         ///< phi has at most one step: every xi <= phi is a diagonal
  Witness,         ///< a verified non-divisible xi <= phi was found
  SearchExhausted  ///< multi-step phi, but the bounded search found nothing
};

struct NondiagonalSearch {
  NondiagonalOutcome outcome = NondiagonalOutcome::OneStep;
  std::optional<Staircase> witness;
  /// Truncation point q when the witness is 0 on [0,q] and phi after q.
  std::optional<Rational> truncation;
};

struct NondiagonalSearchOptions {
  std::uint64_t seed = 20190101;
  int random_probes = 256;
};

/// Looks for xi <= phi that is not divisible by phi. Tries the truncations of
/// phi at each of its jumps first (smallest jump first), then meets of phi
/// with random staircases.
NondiagonalSearch find_nondiagonal_below(const TNormSpec& t, const Staircase& phi,
                                         const NondiagonalSearchOptions& options = {});

}  // namespace qdist
