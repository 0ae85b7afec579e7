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

#include "qdist/enclosure.hpp"

#include <algorithm>

#include "qdist/delta.hpp"
#include "qdist/errors.hpp"
#include "text_reader.hpp"

namespace qdist {

PiecewiseLinearDistribution PiecewiseLinearDistribution::from_knots(
    std::vector<LinearKnot> knots) {
  for (LinearKnot& k : knots) {
    k.time.canonicalize();
    k.value.canonicalize();
  }
  if (knots.empty() || knots.front().time != 0 || knots.front().value != 0) {
    throw DomainError("piecewise-linear distribution must start at (0,0)");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (knots[i].time <= knots[i - 1].time) {
      throw DomainError("piecewise-linear knot times must be strictly increasing");
    }
    if (knots[i].value < knots[i - 1].value || knots[i].value > 1) {
      throw DomainError("piecewise-linear values must be non-decreasing in [0,1]");
    }
  }
  PiecewiseLinearDistribution f;
  f.knots_ = std::move(knots);
  return f;
}

Rational PiecewiseLinearDistribution::eval(const ExtendedTime& t) const {
  if (t.is_infinite()) return knots_.back().value;
  const Rational& x = t.finite_value();
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](const Rational& v, const LinearKnot& k) { return v < k.time; });
  if (it == knots_.end()) return knots_.back().value;
  const LinearKnot& right = *it;
  const LinearKnot& left = *std::prev(it);
  return Rational(left.value +
                  (right.value - left.value) * (x - left.time) / (right.time - left.time));
}

PiecewiseLinearDistribution parse_linear(std::string_view text) {
  detail::TextReader in(text, "piecewise-linear distribution");
  if (in.identifier() != "linear") in.fail("expected 'linear'");
  in.expect('[');
  std::vector<LinearKnot> knots;
  do {
    in.expect('(');
    const auto [line, column] = in.position_after_space();
    ExtendedTime time = in.time();
    if (time.is_infinite()) in.domain_fail("knot times must be finite", line, column);
    in.expect(',');
    UnitRational value = in.unit();
    in.expect(')');
    knots.push_back(LinearKnot{time.finite_value(), value.value()});
  } while (in.accept(','));
  in.expect(']');
  if (!in.at_end()) in.fail("trailing input");
  return PiecewiseLinearDistribution::from_knots(std::move(knots));
}

std::string to_string(const PiecewiseLinearDistribution& f) {
  std::string out = "linear[";
  for (std::size_t i = 0; i < f.knots().size(); ++i) {
    if (i) out += ',';
    out += '(' + to_string(f.knots()[i].time) + ',' + to_string(f.knots()[i].value) + ')';
  }
  return out + ']';
}

Enclosure::Enclosure(Staircase lower, Staircase upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!leq(lower_, upper_)) throw DomainError("enclosure lower bound exceeds upper bound");
}

Enclosure Enclosure::exact(Staircase phi) {
  Staircase copy = phi;
  return Enclosure(std::move(copy), std::move(phi));
}

Enclosure bracket(const PiecewiseLinearDistribution& f, unsigned n) {
  if (n == 0) throw DomainError("bracket resolution must be at least 1");
  const auto& knots = f.knots();
  std::vector<Step> lower;
  std::vector<Step> upper;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const LinearKnot& a = knots[i];
    const LinearKnot& b = knots[i + 1];
    const Rational width = (b.time - a.time) / n;
    const Rational rise = (b.value - a.value) / n;
    for (unsigned k = 0; k < n; ++k) {
      // Cell (a + k w, a + (k+1) w]; f is affine on it.
      Rational left = a.time + width * k;
      lower.push_back(Step{left, Rational(a.value + rise * k)});
      upper.push_back(Step{std::move(left), Rational(a.value + rise * (k + 1))});
    }
  }
  lower.push_back(Step{knots.back().time, knots.back().value});
  upper.push_back(Step{knots.back().time, knots.back().value});
  return Enclosure(Staircase::from_sorted(std::move(lower)),
                   Staircase::from_sorted(std::move(upper)));
}

Enclosure bound_convolve(const TNormSpec& t, const Enclosure& e1, const Enclosure& e2) {
  return Enclosure(convolve(t, e1.lower(), e2.lower()), convolve(t, e1.upper(), e2.upper()));
}

Staircase certified_residual_bound(const TNormSpec& t, const PiecewiseLinearDistribution& f,
                                   const Staircase& xi, unsigned n) {
  const Enclosure box = bracket(f, n);
  return convolve(t, box.upper(), implication(t, box.lower(), xi));
}

namespace {

std::optional<NonDivisibilityCertificate> best_gap(const Staircase& bound, const Staircase& xi,
                                                   std::span<const ExtendedTime> probes) {
  std::optional<NonDivisibilityCertificate> best;
  for (const ExtendedTime& t : probes) {
    const Rational target = eval(xi, t).value();
    const Rational reached = eval(bound, t).value();
    if (reached >= target) continue;
    Rational gap = target - reached;
    if (!best || gap > best->gap || (gap == best->gap && t < best->witness)) {
      best = NonDivisibilityCertificate{t, std::move(gap)};
    }
  }
  return best;
}

// Right end of every cell of the joint partition, plus a point in the
// unbounded last cell. Both staircases are constant on each cell.
std::vector<ExtendedTime> cell_probes(const Staircase& bound, const Staircase& xi) {
  std::vector<Rational> cuts;
  for (const Step& s : bound.steps()) cuts.push_back(s.jump);
  for (const Step& s : xi.steps()) cuts.push_back(s.jump);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<ExtendedTime> probes;
  probes.reserve(cuts.size() + 1);
  for (const Rational& c : cuts) {
    if (c > 0) probes.emplace_back(c);
  }
  probes.emplace_back(cuts.empty() ? Rational(1) : Rational(cuts.back() + 1));
  return probes;
}

}  // namespace

std::optional<NonDivisibilityCertificate> certify_not_divisible(
    const TNormSpec& t, const PiecewiseLinearDistribution& f, const Staircase& xi, unsigned n) {
  const Staircase bound = certified_residual_bound(t, f, xi, n);
  return best_gap(bound, xi, cell_probes(bound, xi));
}

std::optional<NonDivisibilityCertificate> certify_not_divisible_exact(const TNormSpec& t,
                                                                       const Staircase& phi,
                                                                       const Staircase& xi) {
  const Staircase residual = convolve(t, phi, implication(t, phi, xi));
  return best_gap(residual, xi, cell_probes(residual, xi));
}

std::optional<NonDivisibilityCertificate> certify_not_divisible(
    const TNormSpec& t, const PiecewiseLinearDistribution& f, const Staircase& xi, unsigned n,
    std::span<const ExtendedTime> probes) {
  return best_gap(certified_residual_bound(t, f, xi, n), xi, probes);
}

}  // namespace qdist
