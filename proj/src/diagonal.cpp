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

#include "qdist/diagonal.hpp"

#include <algorithm>
#include <random>

#include "qdist/delta.hpp"
#include "qdist/errors.hpp"

namespace qdist {

DivisibilityReport divisibility(const TNormSpec& t, const Staircase& xi, const Staircase& phi) {
  DivisibilityReport report;
  report.quotient = implication(t, phi, xi);
  report.residual = convolve(t, phi, report.quotient);
  report.divisible = report.residual == xi;
  return report;
}

bool is_divisible_by(const TNormSpec& t, const Staircase& xi, const Staircase& phi) {
  // phi (x) psi <= phi always, so anything not below phi fails cheaply.
  if (!leq(xi, phi)) return false;
  return divisibility(t, xi, phi).divisible;
}

bool is_diagonal_between(const TNormSpec& t, const Staircase& xi, const Staircase& phi,
                         const Staircase& psi) {
  return is_divisible_by(t, xi, phi) && is_divisible_by(t, xi, psi);
}

Staircase diagonal_compose(const TNormSpec& t, const Staircase& e, const Staircase& d,
                           const Staircase& mid) {
  if (!is_divisible_by(t, d, mid)) {
    throw PreconditionError("diagonal composition: d = " + to_string(d) +
                            " is not divisible by the middle object " + to_string(mid));
  }
  if (!is_divisible_by(t, e, mid)) {
    throw PreconditionError("diagonal composition: e = " + to_string(e) +
                            " is not divisible by the middle object " + to_string(mid));
  }
  Staircase left = convolve(t, implication(t, mid, e), d);
  Staircase right = convolve(t, e, implication(t, mid, d));
  if (left != right) {
    throw Error("diagonal composition formulas disagree: " + to_string(left) + " vs " +
                to_string(right));
  }
  return left;
}

FlatCriterion flat_criterion_min_detail(const Staircase& xi, const Staircase& phi) {
  // All flat maps are constant on [a_k, a_{k+1}) between consecutive levels.
  std::vector<Rational> levels{Rational(0), Rational(1)};
  for (const Step& s : phi.steps()) levels.push_back(s.level);
  for (const Step& s : xi.steps()) levels.push_back(s.level);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t base = levels.size();
  for (std::size_t i = 0; i + 1 < base; ++i) levels.emplace_back((levels[i] + levels[i + 1]) / 2);
  std::sort(levels.begin(), levels.end());

  // Candidate psi^flat = xi^flat - phi^flat; free (taken as inf) where
  // phi^flat is already infinite.
  std::vector<ExtendedTime> difference;
  difference.reserve(levels.size());
  for (const Rational& a : levels) {
    const UnitRational level(a);
    const ExtendedTime fx = flat(xi, level);
    const ExtendedTime fp = flat(phi, level);
    if (fx < fp) return {};
    difference.push_back(fp.is_infinite() ? ExtendedTime::infinity() : fx - fp);
    if (difference.size() > 1 && difference.back() < difference[difference.size() - 2]) {
      return {};
    }
  }

  // A non-decreasing right-continuous step map g is psi^flat for the psi
  // jumping at each finite value of g up to the level where g leaves it.
  std::vector<Step> steps;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    if (difference[k].is_infinite() || difference[k + 1] == difference[k]) continue;
    steps.push_back(Step{difference[k].finite_value(), levels[k + 1]});
  }
  Staircase psi;
  try {
    psi = Staircase::from_steps(std::move(steps));
  } catch (const DomainError&) {
    return {};
  }
  for (const Rational& a : levels) {
    const UnitRational level(a);
    if (flat(xi, level) != flat(phi, level) + flat(psi, level)) return {};
  }
  return FlatCriterion{true, std::move(psi)};
}

bool flat_criterion_min(const Staircase& xi, const Staircase& phi) {
  return flat_criterion_min_detail(xi, phi).holds;
}

namespace {

Staircase random_staircase_near(const Staircase& phi, std::mt19937_64& rng) {
  const Rational horizon = phi.steps().back().jump + 1;
  std::uniform_int_distribution<int> count_dist(1, static_cast<int>(phi.size()) + 2);
  std::uniform_int_distribution<int> tick(0, 64);
  std::vector<Step> steps;
  const int count = count_dist(rng);
  for (int i = 0; i < count; ++i) {
    Rational jump = horizon * tick(rng) / 64;
    Rational level(tick(rng), 64);
    level.canonicalize();
    jump.canonicalize();
    steps.push_back(Step{std::move(jump), std::move(level)});
  }
  return Staircase::envelope(std::move(steps));
}

}  // namespace

NondiagonalSearch find_nondiagonal_below(const TNormSpec& t, const Staircase& phi,
                                         const NondiagonalSearchOptions& options) {
  NondiagonalSearch result;
  if (phi.size() <= 1) return result;

  // Truncations: 0 on [0,q], phi on (q,inf] for q at the j-th jump, j >= 1.
  const auto& steps = phi.steps();
  for (std::size_t j = 1; j < steps.size(); ++j) {
    Staircase xi = Staircase::from_steps({steps.begin() + static_cast<std::ptrdiff_t>(j),
                                          steps.end()});
    if (!is_divisible_by(t, xi, phi)) {
      result.outcome = NondiagonalOutcome::Witness;
      result.witness = std::move(xi);
      result.truncation = steps[j].jump;
      return result;
    }
  }

  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < options.random_probes; ++i) {
    Staircase xi = meet(phi, random_staircase_near(phi, rng));
    if (!is_divisible_by(t, xi, phi)) {
      result.outcome = NondiagonalOutcome::Witness;
      result.witness = std::move(xi);
      return result;
    }
  }
  result.outcome = NondiagonalOutcome::SearchExhausted;
  return result;
}

}  // namespace qdist
