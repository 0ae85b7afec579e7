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

#include "qdist/staircase.hpp"

#include <algorithm>

#include "qdist/errors.hpp"
#include "text_reader.hpp"

namespace qdist {

namespace {

const Rational& zero_level() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

Staircase Staircase::from_steps(std::vector<Step> steps) {
  for (Step& s : steps) {
    s.jump.canonicalize();
    s.level.canonicalize();
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    if (s.jump < 0) throw DomainError("staircase jump " + to_string(s.jump) + " is negative");
    if (s.level <= 0 || s.level > 1) {
      throw DomainError("staircase level " + to_string(s.level) + " must lie in (0,1]");
    }
    if (i > 0 && (s.jump <= steps[i - 1].jump || s.level <= steps[i - 1].level)) {
      throw DomainError("staircase steps must be strictly increasing in jump and level");
    }
  }
  return Staircase(std::move(steps));
}

Staircase Staircase::envelope(std::vector<Step> candidates) {
  for (Step& s : candidates) {
    s.jump.canonicalize();
    s.level.canonicalize();
  }
  std::sort(candidates.begin(), candidates.end(), [](const Step& a, const Step& b) {
    return a.jump < b.jump;
  });
  return from_sorted(std::move(candidates));
}

Staircase Staircase::from_sorted(std::vector<Step> sorted) {
  std::vector<Step> out;
  const Rational* current = &zero_level();
  for (Step& c : sorted) {
    if (c.level <= *current) continue;
    if (!out.empty() && out.back().jump == c.jump) {
      out.back().level = std::move(c.level);
    } else {
      out.push_back(std::move(c));
    }
    current = &out.back().level;
  }
  return Staircase(std::move(out));
}

Staircase Staircase::top() { return Staircase({Step{Rational(0), Rational(1)}}); }

Rational Staircase::final_level() const {
  return steps_.empty() ? Rational(0) : steps_.back().level;
}

const Rational& Staircase::level_at(const Rational& t) const {
  // First step whose jump is >= t; everything before it has jumped.
  auto it = std::lower_bound(steps_.begin(), steps_.end(), t,
                             [](const Step& s, const Rational& v) { return s.jump < v; });
  return it == steps_.begin() ? zero_level() : std::prev(it)->level;
}

const Rational& Staircase::level_after(const Rational& t) const {
  auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                             [](const Rational& v, const Step& s) { return v < s.jump; });
  return it == steps_.begin() ? zero_level() : std::prev(it)->level;
}

Staircase one_step(const ExtendedTime& p, const UnitRational& a) {
  if (p.is_infinite()) {
    throw DomainError("one-step functions are defined only for finite jump times");
  }
  if (a.value() == 0) return Staircase();
  return Staircase::from_steps({Step{p.finite_value(), a.value()}});
}

UnitRational eval(const Staircase& phi, const ExtendedTime& t) {
  if (t.is_infinite()) return UnitRational(phi.final_level());
  return UnitRational(phi.level_at(t.finite_value()));
}

Staircase join(const Staircase& phi, const Staircase& psi) {
  std::vector<Step> merged;
  merged.reserve(phi.size() + psi.size());
  std::merge(phi.steps().begin(), phi.steps().end(), psi.steps().begin(), psi.steps().end(),
             std::back_inserter(merged),
             [](const Step& a, const Step& b) { return a.jump < b.jump; });
  return Staircase::from_sorted(std::move(merged));
}

Staircase meet(const Staircase& phi, const Staircase& psi) {
  const auto& a = phi.steps();
  const auto& b = psi.steps();
  std::vector<Step> out;
  out.reserve(std::min(a.size(), b.size()));
  std::size_t i = 0;
  std::size_t j = 0;
  const Rational* la = &zero_level();
  const Rational* lb = &zero_level();
  while (i < a.size() || j < b.size()) {
    const Rational* jump;
    if (j == b.size() || (i < a.size() && a[i].jump < b[j].jump)) {
      jump = &a[i].jump;
    } else {
      jump = &b[j].jump;
    }
    if (i < a.size() && a[i].jump == *jump) la = &a[i++].level;
    if (j < b.size() && b[j].jump == *jump) lb = &b[j++].level;
    out.push_back(Step{*jump, *la < *lb ? *la : *lb});
  }
  return Staircase::from_sorted(std::move(out));
}

bool leq(const Staircase& phi, const Staircase& psi) {
  // phi <= psi iff psi has reached each level of phi right after its jump.
  const auto& b = psi.steps();
  std::size_t j = 0;
  const Rational* lb = &zero_level();
  for (const Step& s : phi.steps()) {
    while (j < b.size() && b[j].jump <= s.jump) lb = &b[j++].level;
    if (*lb < s.level) return false;
  }
  return true;
}

ExtendedTime flat(const Staircase& phi, const UnitRational& a) {
  const auto& steps = phi.steps();
  auto it = std::upper_bound(steps.begin(), steps.end(), a.value(),
                             [](const Rational& v, const Step& s) { return v < s.level; });
  if (it == steps.end()) return ExtendedTime::infinity();
  return ExtendedTime(it->jump);
}

std::vector<std::pair<ExtendedTime, UnitRational>> decompose_steps(const Staircase& phi) {
  std::vector<std::pair<ExtendedTime, UnitRational>> out;
  out.reserve(phi.size());
  for (const Step& s : phi.steps()) out.emplace_back(ExtendedTime(s.jump), UnitRational(s.level));
  return out;
}

std::string to_string(const Staircase& phi) {
  std::string out = "steps[";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) out += ',';
    out += '(' + to_string(phi.steps()[i].jump) + ',' + to_string(phi.steps()[i].level) + ')';
  }
  return out + ']';
}

Staircase parse_staircase(std::string_view text) {
  detail::TextReader in(text, "staircase");
  if (in.identifier() != "steps") in.fail("expected 'steps'");
  in.expect('[');
  std::vector<Step> steps;
  if (!in.accept(']')) {
    do {
      in.expect('(');
      const auto [line, column] = in.position_after_space();
      ExtendedTime jump = in.time();
      if (jump.is_infinite()) in.domain_fail("a staircase cannot jump at infinity", line, column);
      in.expect(',');
      UnitRational level = in.unit();
      in.expect(')');
      steps.push_back(Step{jump.finite_value(), level.value()});
    } while (in.accept(','));
    in.expect(']');
  }
  if (!in.at_end()) in.fail("trailing input");
  return Staircase::from_steps(std::move(steps));
}

MonotoneStep MonotoneStep::from_knots(std::vector<Knot> knots,
                                      std::optional<Rational> infinity_level) {
  if (knots.empty() || knots.front().time != 0) {
    throw DomainError("monotone step map must have a knot at time 0");
  }
  const Rational* previous = &zero_level();
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const Knot& k = knots[i];
    if (i > 0 && k.time <= knots[i - 1].time) {
      throw DomainError("monotone step knots must be strictly increasing in time");
    }
    if (k.at < *previous || k.after < k.at || k.after > 1 || k.at < 0) {
      throw DomainError("monotone step values must be monotone and lie in [0,1]");
    }
    previous = &k.after;
  }
  if (infinity_level && (*infinity_level < *previous || *infinity_level > 1)) {
    throw DomainError("value at infinity must dominate all finite values and lie in [0,1]");
  }
  MonotoneStep m;
  m.knots_ = std::move(knots);
  m.infinity_level_ = std::move(infinity_level);
  return m;
}

MonotoneStep MonotoneStep::from_staircase(const Staircase& phi) {
  std::vector<Knot> knots;
  knots.push_back(Knot{Rational(0), Rational(0), phi.level_after(Rational(0))});
  for (const Step& s : phi.steps()) {
    if (s.jump == 0) continue;
    knots.push_back(Knot{s.jump, phi.level_at(s.jump), s.level});
  }
  return from_knots(std::move(knots));
}

Rational MonotoneStep::value_at_infinity() const {
  return infinity_level_ ? *infinity_level_ : knots_.back().after;
}

Rational MonotoneStep::eval(const ExtendedTime& t) const {
  if (t.is_infinite()) return value_at_infinity();
  const Rational& v = t.finite_value();
  auto it = std::upper_bound(knots_.begin(), knots_.end(), v,
                             [](const Rational& x, const Knot& k) { return x < k.time; });
  const Knot& k = *std::prev(it);  // knots_[0].time == 0 <= v
  return k.time == v ? k.at : k.after;
}

MonotoneStep MonotoneStep::simplified() const {
  std::vector<Knot> out;
  for (const Knot& k : knots_) {
    if (!out.empty() && k.at == out.back().after && k.after == out.back().after) continue;
    out.push_back(k);
  }
  std::optional<Rational> inf = infinity_level_;
  if (inf && *inf == out.back().after) inf.reset();
  return from_knots(std::move(out), std::move(inf));
}

Staircase regularize(const MonotoneStep& m) {
  std::vector<Step> steps;
  steps.reserve(m.knots().size());
  for (const Knot& k : m.knots()) steps.push_back(Step{k.time, k.after});
  return Staircase::from_sorted(std::move(steps));
}

}  // namespace qdist
