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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdist/delta.hpp"
#include "qdist/diagonal.hpp"
#include "qdist/enclosure.hpp"
#include "qdist/errors.hpp"

using namespace qdist;
using namespace qdist::testing;

namespace {

const PiecewiseLinearDistribution kRamp = parse_linear("linear[(0,0),(1,1)]");

Staircase kappa(const Rational& p, const Rational& a) {
  return one_step(ExtendedTime(p), UnitRational(a));
}

PiecewiseLinearDistribution random_linear(Rng& rng) {
  const int k = uniform(rng, 1, 4);
  std::vector<Rational> times;
  while (static_cast<int>(times.size()) < k) {
    Rational t = random_time(rng, 3);
    if (t > 0 && std::find(times.begin(), times.end(), t) == times.end()) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  std::vector<Rational> values;
  for (int i = 0; i < k; ++i) values.push_back(random_level(rng));
  std::sort(values.begin(), values.end());
  std::vector<LinearKnot> knots{LinearKnot{0, 0}};
  for (int i = 0; i < k; ++i) knots.push_back(LinearKnot{times[i], values[i]});
  return PiecewiseLinearDistribution::from_knots(std::move(knots));
}

/// sup_{s<=t} f(s) * g(t-s) on a uniform grid of m points plus the breakpoints
/// of g; an independent estimate that never exceeds the true value.
Rational fine_grid_lower(const TNormSpec& tn, const PiecewiseLinearDistribution& f,
                         const Staircase& g, const Rational& t, int m) {
  Rational best = 0;
  auto consider = [&](const Rational& s) {
    if (s < 0 || s > t) return;
    const Rational v = tn.apply(f.eval(ExtendedTime(s)), value_at(g, Rational(t - s)));
    if (v > best) best = v;
  };
  for (int k = 0; k <= m; ++k) consider(Rational(t * k / m));
  for (const Step& st : g.steps()) consider(Rational(t - st.jump - Rational(1, 100000)));
  return best;
}

}  // namespace

TEST(Linear, ParseAndEvaluate) {
  EXPECT_EQ(to_string(kRamp), "linear[(0,0),(1,1)]");
  EXPECT_EQ(kRamp.eval(ExtendedTime(Rational(1, 3))), Rational(1, 3));
  EXPECT_EQ(kRamp.eval(ExtendedTime(Rational(5))), 1);
  EXPECT_EQ(kRamp.eval(ExtendedTime::infinity()), 1);
  EXPECT_THROW(parse_linear("linear[(1,0),(2,1)]"), DomainError);
  EXPECT_THROW(parse_linear("linear[(0,0),(1,1/2),(1,1)]"), DomainError);
  EXPECT_THROW(parse_linear("linear[(0,0),(1,1/2),(2,1/4)]"), DomainError);
  EXPECT_THROW(parse_linear("linear[(0,0),(1,1)"), ParseError);
}

TEST(Bracket, Examples) {
  // A flat distribution is bracketed exactly.
  const Enclosure flat = bracket(parse_linear("linear[(0,0)]"), 4);
  EXPECT_EQ(flat.lower(), Staircase());
  EXPECT_EQ(flat.upper(), Staircase());
  const Enclosure two = bracket(kRamp, 2);
  EXPECT_EQ(two.lower(), parse_staircase("steps[(1/2,1/2),(1,1)]"));
  EXPECT_EQ(two.upper(), parse_staircase("steps[(0,1/2),(1/2,1)]"));
  EXPECT_TRUE(leq(bracket(kRamp, 4).upper(), two.upper()));
  EXPECT_TRUE(leq(two.lower(), bracket(kRamp, 4).lower()));
  EXPECT_THROW(bracket(kRamp, 0), DomainError);
}

TEST(Enclosure, RejectsCrossedBounds) {
  EXPECT_THROW(Enclosure(Staircase::top(), Staircase()), DomainError);
  const Enclosure e = Enclosure::exact(kappa(1, Rational(1, 2)));
  EXPECT_EQ(e.lower(), e.upper());
}

TEST(BoundConvolve, ExactOperandsGiveExactResults) {
  const Staircase a = parse_staircase("steps[(1,1/3),(2,1)]");
  const Staircase b = parse_staircase("steps[(1/2,1/2)]");
  for (const NamedTNorm& t : suite_tnorms()) {
    const Enclosure e = bound_convolve(t.spec, Enclosure::exact(a), Enclosure::exact(b));
    EXPECT_EQ(e.lower(), convolve(t.spec, a, b));
    EXPECT_EQ(e.upper(), convolve(t.spec, a, b));
  }
}

TEST(BoundConvolve, EnclosesTheRampSquaredUnderMinimum) {
  // (f (x) f)(2) under min is sup_{s} min(f(s), f(2-s)) = 1, attained at s = 1,
  // and (f (x) f)(1) = f(1/2) = 1/2.
  const Enclosure e = bracket(kRamp, 8);
  const Enclosure sq = bound_convolve(TNormSpec::minimum(), e, e);
  EXPECT_LE(eval(sq.lower(), ExtendedTime(Rational(1))).value(), Rational(1, 2));
  EXPECT_GE(eval(sq.upper(), ExtendedTime(Rational(1))).value(), Rational(1, 2));
  EXPECT_LE(eval(sq.lower(), ExtendedTime(Rational(2))).value(), 1);
  EXPECT_EQ(eval(sq.upper(), ExtendedTime(Rational(2))).value(), 1);
}

TEST(Certify, RampAgainstUnitStep) {
  const Staircase xi = kappa(1, 1);
  const std::vector<ExtendedTime> at_three_halves{ExtendedTime(Rational(3, 2))};
  const auto min_cert =
      certify_not_divisible(TNormSpec::minimum(), kRamp, xi, 128, at_three_halves);
  ASSERT_TRUE(min_cert);
  EXPECT_EQ(min_cert->witness, ExtendedTime(Rational(3, 2)));
  EXPECT_GE(min_cert->gap, 1 - (Rational(1, 2) + Rational(1, 128)));
  for (const NamedTNorm& t : suite_tnorms()) {
    const auto cert = certify_not_divisible(t.spec, kRamp, xi, 128);
    ASSERT_TRUE(cert) << t.name;
    EXPECT_GT(cert->gap, 0);
  }
}

TEST(Certify, ExactStaircasesNeverCertifyDivisibleInstances) {
  Rng rng(kSeed);
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < 40; ++i) {
      const Staircase phi = random_staircase(rng, 0, 4);
      const Staircase xi = convolve(t.spec, phi, random_staircase(rng, 0, 3));
      EXPECT_FALSE(certify_not_divisible_exact(t.spec, phi, xi));
      const Staircase other = random_staircase(rng, 0, 4);
      EXPECT_EQ(certify_not_divisible_exact(t.spec, phi, other).has_value(),
                !is_divisible_by(t.spec, other, phi));
    }
  }
}

TEST(EnclosureProperty, Sandwich) {
  Rng rng(kSeed + 1);
  for (int i = 0; i < 100; ++i) {
    const PiecewiseLinearDistribution f = random_linear(rng);
    const unsigned n = static_cast<unsigned>(uniform(rng, 1, 16));
    const Enclosure e = bracket(f, n);
    for (int k = 0; k <= 80; ++k) {
      const Rational t(k, 20);
      EXPECT_LE(value_at(e.lower(), t), f.eval(ExtendedTime(t)));
      EXPECT_GE(value_at(e.upper(), t), f.eval(ExtendedTime(t)));
    }
    // Refinement by doubling never widens the enclosure.
    const Enclosure fine = bracket(f, 2 * n);
    EXPECT_TRUE(leq(fine.upper(), e.upper()));
    EXPECT_TRUE(leq(e.lower(), fine.lower()));
  }
}

TEST(EnclosureProperty, CertificatesAreSound) {
  Rng rng(kSeed + 2);
  int certified = 0;
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < 25; ++i) {
      const PiecewiseLinearDistribution f = random_linear(rng);
      const Staircase xi = random_staircase(rng, 1, 3, 3);
      const auto cert = certify_not_divisible(t.spec, f, xi, 16);
      if (!cert) continue;
      ++certified;
      // f => xi lies below lower(f) => xi, so the true residual at the
      // witness is at most the grid estimate built from that upper bound.
      const Staircase quotient = implication(t.spec, bracket(f, 16).lower(), xi);
      const Rational at = cert->witness.is_infinite() ? Rational(1000) : cert->witness.finite_value();
      EXPECT_LT(fine_grid_lower(t.spec, f, quotient, at, 400), eval(xi, cert->witness).value())
          << t.name << " " << to_string(f) << " " << to_string(xi);
    }
  }
  EXPECT_GT(certified, 0);
}
