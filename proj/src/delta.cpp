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

#include "qdist/delta.hpp"

#include <algorithm>

#include "qdist/errors.hpp"

namespace qdist {

namespace {

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

// sup_{s<=t} m1(s) * m2(t-s) for finite t. Both factors are constant on the
// open gaps between the points {knots of m1} and {t - knots of m2}, so the
// supremum is a maximum over those points and one midpoint per gap.
Rational finite_convolution_value(const TNormSpec& t, const MonotoneStep& m1,
                                  const MonotoneStep& m2, const Rational& time) {
  std::vector<Rational> points{Rational(0), time};
  for (const Knot& k : m1.knots()) {
    if (k.time <= time) points.push_back(k.time);
  }
  for (const Knot& k : m2.knots()) {
    if (k.time <= time) points.emplace_back(time - k.time);
  }
  sort_unique(points);
  Rational best(0);
  auto consider = [&](const Rational& s) {
    Rational v = t.apply(m1.eval(ExtendedTime(s)), m2.eval(ExtendedTime(Rational(time - s))));
    if (v > best) best = std::move(v);
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    consider(points[i]);
    if (i + 1 < points.size()) consider(Rational((points[i] + points[i + 1]) / 2));
  }
  return best;
}

Staircase step_implication_raw(const TNormSpec& t, const Rational& p, const Rational& a,
                               const Staircase& xi) {
  std::vector<Step> steps;
  steps.reserve(xi.size() + 1);
  steps.push_back(Step{Rational(0), t.implies(a, xi.level_after(p))});
  for (const Step& s : xi.steps()) {
    if (s.jump > p) steps.push_back(Step{Rational(s.jump - p), t.implies(a, s.level)});
  }
  return Staircase::from_sorted(std::move(steps));
}

Rational rho_finite(const TNormSpec& t, const Staircase& phi, const Staircase& xi,
                    const Rational& shift) {
  std::vector<Rational> cuts;
  cuts.reserve(phi.size() + xi.size());
  for (const Step& s : phi.steps()) {
    if (s.jump > 0) cuts.push_back(s.jump);
  }
  for (const Step& s : xi.steps()) {
    if (s.jump > shift) cuts.emplace_back(s.jump - shift);
  }
  sort_unique(cuts);
  // Every cell (c_{k-1}, c_k] is represented by its right end; the unbounded
  // tail past the last cut by one more unit.
  cuts.push_back(cuts.empty() ? Rational(1) : Rational(cuts.back() + 1));
  Rational best(1);
  for (const Rational& q : cuts) {
    Rational v = t.implies(phi.level_at(q), xi.level_at(Rational(q + shift)));
    if (v < best) best = std::move(v);
  }
  return best;
}

Rational rho_value(const TNormSpec& t, const Staircase& phi, const Staircase& xi,
                   const ExtendedTime& at) {
  if (at.is_infinite()) return t.implies(phi.final_level(), xi.final_level());
  return rho_finite(t, phi, xi, at.finite_value());
}

}  // namespace

Staircase convolve(const TNormSpec& t, const Staircase& phi, const Staircase& psi) {
  if (phi.empty() || psi.empty()) return Staircase();
  // Upper envelope of kappa_{p_i + q_k, a_i * b_k}, swept in jump order by a
  // k-way merge over the rows i. Levels grow along each row, so a row skips
  // by binary search to its first candidate above the running maximum and
  // leaves the merge once its last candidate cannot rise above it.
  const std::vector<Step>& rows = phi.steps();
  const std::vector<Step>& cols = psi.steps();
  const Rational& last = cols.back().level;
  auto level = [&](std::size_t i, std::size_t k) { return t.apply(rows[i].level, cols[k].level); };
  struct Head {
    Rational jump;
    Rational level;
    std::size_t row;
    std::size_t col;
  };
  auto later = [](const Head& a, const Head& b) { return a.jump > b.jump; };
  std::vector<Head> heap;
  Rational current = 0;
  // Pushes the first candidate of row i at column >= from whose level
  // exceeds `current`, if any.
  auto advance = [&](std::size_t i, std::size_t from) {
    if (from >= cols.size() || t.apply(rows[i].level, last) <= current) return;
    std::size_t lo = from;
    std::size_t hi = cols.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (level(i, mid) > current) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    heap.push_back(Head{Rational(rows[i].jump + cols[lo].jump), level(i, lo), i, lo});
    std::push_heap(heap.begin(), heap.end(), later);
  };
  for (std::size_t i = 0; i < rows.size(); ++i) advance(i, 0);
  std::vector<Step> out;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), later);
    Head h = std::move(heap.back());
    heap.pop_back();
    if (h.level > current) {
      current = h.level;
      if (!out.empty() && out.back().jump == h.jump) {
        out.back().level = std::move(h.level);
      } else {
        out.push_back(Step{std::move(h.jump), std::move(h.level)});
      }
    }
    advance(h.row, h.col + 1);
  }
  return Staircase::from_sorted(std::move(out));
}

MonotoneStep convolve_monotone(const TNormSpec& t, const MonotoneStep& m1,
                               const MonotoneStep& m2) {
  std::vector<Rational> breaks;
  for (const Knot& a : m1.knots()) {
    for (const Knot& b : m2.knots()) breaks.emplace_back(a.time + b.time);
  }
  sort_unique(breaks);
  std::vector<Knot> knots;
  knots.reserve(breaks.size());
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const Rational probe = i + 1 < breaks.size() ? Rational((breaks[i] + breaks[i + 1]) / 2)
                                                 : Rational(breaks[i] + 1);
    knots.push_back(Knot{breaks[i], finite_convolution_value(t, m1, m2, breaks[i]),
                         finite_convolution_value(t, m1, m2, probe)});
  }
  return MonotoneStep::from_knots(std::move(knots),
                                  t.apply(m1.value_at_infinity(), m2.value_at_infinity()))
      .simplified();
}

Staircase step_implication(const TNormSpec& t, const ExtendedTime& p, const UnitRational& a,
                           const Staircase& xi) {
  if (p.is_infinite()) {
    throw DomainError("one-step functions are defined only for finite jump times");
  }
  return step_implication_raw(t, p.finite_value(), a.value(), xi);
}

Staircase implication(const TNormSpec& t, const Staircase& phi, const Staircase& xi) {
  // (join_i kappa_i) => xi = meet_i (kappa_i => xi); the empty meet is top.
  Staircase result = Staircase::top();
  for (const Step& s : phi.steps()) {
    result = meet(result, step_implication_raw(t, s.jump, s.level, xi));
    if (result.empty()) break;
  }
  return result;
}

std::vector<RhoBounds> rho_grid(const TNormSpec& t, const Staircase& phi, const Staircase& xi,
                                std::span<const ExtendedTime> grid) {
  std::vector<RhoBounds> out;
  out.reserve(grid.size());
  for (const ExtendedTime& at : grid) {
    UnitRational v(rho_value(t, phi, xi, at));
    out.push_back(RhoBounds{v, v});
  }
  return out;
}

std::vector<UnitRational> regularized_rho_grid(const TNormSpec& t, const Staircase& phi,
                                               const Staircase& xi,
                                               std::span<const ExtendedTime> grid) {
  // rho changes value only where some jump of xi, shifted left by t, meets a
  // jump of phi or 0.
  std::vector<Rational> changes;
  for (const Step& x : xi.steps()) {
    changes.push_back(x.jump);
    for (const Step& f : phi.steps()) {
      if (x.jump > f.jump) changes.emplace_back(x.jump - f.jump);
    }
  }
  sort_unique(changes);

  std::vector<UnitRational> out;
  out.reserve(grid.size());
  for (const ExtendedTime& at : grid) {
    if (at.is_finite() && at.finite_value() == 0) {
      out.push_back(UnitRational::zero());
      continue;
    }
    Rational probe;
    if (at.is_infinite()) {
      probe = changes.empty() ? Rational(1) : Rational(changes.back() + 1);
    } else {
      const Rational& time = at.finite_value();
      auto below = std::lower_bound(changes.begin(), changes.end(), time);
      const Rational floor = below == changes.begin() ? Rational(0) : *std::prev(below);
      probe = (floor + time) / 2;
    }
    out.emplace_back(rho_finite(t, phi, xi, probe));
  }
  return out;
}

}  // namespace qdist
