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

// Acceptance runner: one PASS/FAIL line per criterion. Sample counts,
// tolerances and time limits are pinned below.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "metric_generators.hpp"
#include "oracles.hpp"
#include "qdist/delta.hpp"
#include "qdist/diagonal.hpp"
#include "qdist/enclosure.hpp"
#include "qdist/finite_quantale.hpp"
#include "qdist/metric.hpp"

using namespace qdist;
using namespace qdist::testing;

namespace {

// Pinned sample sizes.
constexpr int kStepQuadruples = 500;
constexpr int kAdjunctionTriples = 300;
constexpr int kAdjunctionMaxSteps = 6;
constexpr int kQuantaleTriples = 200;
constexpr int kMonotonePairs = 200;
constexpr int kOneStepPhis = 50;
constexpr int kOneStepXis = 200;
constexpr int kMultiStepPhis = 100;
constexpr int kFlatPairs = 200;
constexpr int kRhoPairs = 100;
constexpr std::size_t kRhoGridPoints = 50;
constexpr int kParMetInstances = 100;
constexpr int kProbMetInstances = 50;
constexpr int kProbParMetDraws = 50;
constexpr int kLargeSteps = 1000;
constexpr int kConsequentSteps = 100;
constexpr unsigned kCertifyPieces = 128;
constexpr int kSoundnessGrid = 512;

// Pinned time limits in seconds.
constexpr double kStepLawSeconds = 2;
constexpr double kAdjunctionSeconds = 10;
constexpr double kQuantaleSeconds = 10;
constexpr double kCertifySeconds = 5;
constexpr double kLabSeconds = 5;
constexpr double kConvolutionSeconds = 2;
constexpr double kImplicationSeconds = 5;

// Certificate gap required for the minimum t-norm at t = 3/2:
// 1 - (1/2 + 1/128). All comparisons are otherwise exact (tolerance 0).
const Rational kMinGapFloor = Rational(1) - (Rational(1, 2) + Rational(1, 128));

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

Staircase kappa(const Rational& p, const Rational& a) {
  return one_step(ExtendedTime(p), UnitRational(a));
}

/// Time-limited wrapper: the criterion fails if it overruns `limit`.
Outcome timed(double limit, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o = body();
  const double s = seconds_since(start);
  o.detail += (o.detail.empty() ? "" : ", ") + seconds(s) + " (limit " + seconds(limit) + ")";
  if (s >= limit) o.pass = false;
  return o;
}

Outcome step_laws(std::string& note) {
  Rng rng(kSeed + 101);
  int conv_fail = 0;
  int imp_fail = 0;
  int corrected_fail = 0;
  std::string failing;
  for (const NamedTNorm& t : suite_tnorms()) {
    int local = 0;
    for (int i = 0; i < kStepQuadruples; ++i) {
      const Rational p = random_time(rng);
      const Rational q = random_time(rng);
      const Rational a = random_level(rng, true);
      const Rational b = random_level(rng, true);
      if (convolve(t.spec, kappa(p, a), kappa(q, b)) != kappa(Rational(p + q), t.spec.apply(a, b))) {
        ++conv_fail;
      }
      const Rational shift = q > p ? Rational(q - p) : Rational(0);
      const Staircase imp = implication(t.spec, kappa(p, a), kappa(q, b));
      if (imp != kappa(shift, t.spec.implies(a, b))) ++local;
      if (imp != join(kappa(0, t.spec.implies(a, 0)), kappa(shift, t.spec.implies(a, b)))) {
        ++corrected_fail;
      }
    }
    if (local) failing += (failing.empty() ? "" : ",") + t.name + ":" + std::to_string(local);
    imp_fail += local;
  }
  note = "closed form with the a->0 term: " + std::to_string(corrected_fail) + " mismatches";
  Outcome o;
  o.pass = conv_fail == 0 && imp_fail == 0;
  o.detail = "convolution mismatches " + std::to_string(conv_fail) + ", implication mismatches " +
             std::to_string(imp_fail) + (failing.empty() ? "" : " [" + failing + "]");
  return o;
}

Outcome adjunction() {
  Rng rng(kSeed + 102);
  int failures = 0;
  int holds = 0;
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < kAdjunctionTriples; ++i) {
      const Staircase phi = random_staircase(rng, 0, kAdjunctionMaxSteps);
      const Staircase xi = random_staircase(rng, 0, kAdjunctionMaxSteps);
      const Staircase psi = random_staircase(rng, 0, kAdjunctionMaxSteps);
      const Staircase imp = implication(t.spec, phi, xi);
      // Every other triple is pulled below phi => xi so both sides of the
      // equivalence are exercised.
      const Staircase chosen = i % 2 ? meet(psi, imp) : psi;
      const bool lhs = leq(convolve(t.spec, phi, chosen), xi);
      if (lhs != leq(chosen, imp)) ++failures;
      if (lhs) ++holds;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures (" + std::to_string(holds) +
                             " triples with phi (x) psi <= xi)"};
}

Outcome quantale_laws() {
  Rng rng(kSeed + 103);
  int failures = 0;
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < kQuantaleTriples; ++i) {
      const Staircase a = random_staircase(rng, 0, 4);
      const Staircase b = random_staircase(rng, 0, 4);
      const Staircase c = random_staircase(rng, 0, 4);
      if (convolve(t.spec, a, b) != convolve(t.spec, b, a)) ++failures;
      if (convolve(t.spec, convolve(t.spec, a, b), c) != convolve(t.spec, a, convolve(t.spec, b, c))) {
        ++failures;
      }
      if (convolve(t.spec, a, Staircase::top()) != a) ++failures;
      if (convolve(t.spec, a, join(b, c)) != join(convolve(t.spec, a, b), convolve(t.spec, a, c))) {
        ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(failures) + " law violations"};
}

Outcome regularization() {
  Rng rng(kSeed + 104);
  int failures = 0;
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < kMonotonePairs; ++i) {
      const MonotoneStep m1 = random_monotone(rng, 5);
      const MonotoneStep m2 = random_monotone(rng, 5);
      if (regularize(convolve_monotone(t.spec, m1, m2)) !=
          convolve(t.spec, regularize(m1), regularize(m2))) {
        ++failures;
      }
    }
  }
  // kappa_{0,1} against the map that is 0 on [0,inf) and 1 at infinity.
  const MonotoneStep one = MonotoneStep::from_staircase(Staircase::top());
  const MonotoneStep late = MonotoneStep::from_knots({Knot{0, 0, 0}}, Rational(1));
  const MonotoneStep r = convolve_monotone(TNormSpec::minimum(), one, late);
  const bool counterexample = regularize(r) == Staircase() && r.value_at_infinity() == 1 &&
                      r.eval(ExtendedTime(Rational(1000))) == 0;
  return {failures == 0 && counterexample,
          std::to_string(failures) + " mismatches, infinity counterexample " +
              (counterexample ? "reproduced (finite part 0, value 1 at inf)" : "NOT reproduced")};
}

Outcome one_step_divisibility() {
  Rng rng(kSeed + 105);
  int failures = 0;
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < kOneStepPhis; ++i) {
      const Staircase phi = kappa(random_time(rng), random_level(rng, true));
      for (int j = 0; j < kOneStepXis; ++j) {
        const Staircase xi = meet(random_staircase(rng, 0, 4), phi);
        if (!is_divisible_by(t.spec, xi, phi)) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(failures) + " non-divisible"};
}

Outcome only_one_step() {
  Rng rng(kSeed + 106);
  int missing = 0;
  int unverified = 0;
  int one_step_wrong = 0;
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < kMultiStepPhis; ++i) {
      const Staircase phi = random_staircase(rng, 2, 5);
      const NondiagonalSearch s = find_nondiagonal_below(t.spec, phi);
      if (s.outcome != NondiagonalOutcome::Witness || !s.witness) {
        ++missing;
        continue;
      }
      // Verify by brute force: the witness is below phi and differs from
      // phi (x) (phi => witness) at some probe time.
      const Staircase& xi = *s.witness;
      const Staircase q = implication(t.spec, phi, xi);
      bool differs = false;
      // Breakpoints of phi (x) q lie among sums of jumps.
      std::vector<Rational> cuts;
      for (const Step& x : xi.steps()) cuts.push_back(x.jump);
      for (const Step& a : phi.steps()) {
        for (const Step& b : q.steps()) cuts.push_back(Rational(a.jump + b.jump));
      }
      for (const Rational& u : cell_samples(cuts)) {
        if (convolution_oracle(t.spec, phi, q, u) != value_at(xi, u)) differs = true;
      }
      if (!pointwise_leq(xi, phi) || !differs) ++unverified;
      const Staircase single = kappa(random_time(rng), random_level(rng, true));
      if (find_nondiagonal_below(t.spec, single).outcome != NondiagonalOutcome::OneStep) {
        ++one_step_wrong;
      }
    }
  }
  return {missing == 0 && unverified == 0 && one_step_wrong == 0,
          std::to_string(missing) + " searches without witness, " + std::to_string(unverified) +
              " unverified witnesses, " + std::to_string(one_step_wrong) +
              " one-step inputs with a witness"};
}

Outcome flat_criterion() {
  Rng rng(kSeed + 107);
  const TNormSpec t = TNormSpec::minimum();
  int failures = 0;
  int divisible = 0;
  for (int i = 0; i < kFlatPairs; ++i) {
    const Staircase phi = random_staircase(rng, 0, 4);
    const Staircase xi = i % 2 ? meet(random_staircase(rng, 0, 4), phi) : random_staircase(rng, 0, 4);
    const bool d = is_divisible_by(t, xi, phi);
    if (flat_criterion_min(xi, phi) != d) ++failures;
    if (d) ++divisible;
  }
  return {failures == 0, std::to_string(failures) + " disagreements (" + std::to_string(divisible) +
                             " divisible pairs)"};
}

/// Fine-grid value of f (x) (f => xi) at t: g(u) is the infimum over grid q
/// of f(q) -> xi(q + u), then the supremum over grid s <= t of f(s) * g(t - s).
Rational fine_grid_residual(const TNormSpec& tn, const PiecewiseLinearDistribution& f,
                            const Staircase& xi, const Rational& t) {
  const Rational horizon = f.knots().back().time + t + 1;
  const Rational h = horizon / kSoundnessGrid;
  auto g = [&](const Rational& u) {
    Rational best = 1;
    for (int k = 1; k <= kSoundnessGrid; ++k) {
      const Rational q = h * k;
      const Rational v = implies_oracle(tn, f.eval(ExtendedTime(q)), value_at(xi, Rational(q + u)));
      if (v < best) best = v;
    }
    return best;
  };
  Rational best = 0;
  const Rational step = t / kSoundnessGrid;
  for (int k = 0; k <= kSoundnessGrid; ++k) {
    const Rational s = step * k;
    const Rational v = tnorm_oracle(tn, f.eval(ExtendedTime(s)), g(Rational(t - s)));
    if (v > best) best = v;
  }
  return best;
}

Outcome certificates() {
  const PiecewiseLinearDistribution f = parse_linear("linear[(0,0),(1,1)]");
  const Staircase xi = kappa(1, 1);
  Outcome o;
  for (const auto& [name, t] : std::vector<std::pair<std::string, TNormSpec>>{
           {"min", TNormSpec::minimum()},
           {"prod", TNormSpec::product()},
           {"luk", TNormSpec::lukasiewicz()}}) {
    const auto cert = certify_not_divisible(t, f, xi, kCertifyPieces);
    if (!cert) {
      o.pass = false;
      o.detail += name + ": none; ";
      continue;
    }
    const Rational at = cert->witness.finite_value();
    const Rational fine = fine_grid_residual(t, f, xi, at);
    const bool sound = fine + cert->gap <= value_at(xi, at);
    if (!sound) o.pass = false;
    o.detail += name + ": t=" + to_string(cert->witness) + " gap=" + to_string(cert->gap) +
                (sound ? " sound; " : " UNSOUND; ");
  }
  const std::array<ExtendedTime, 1> probe{ExtendedTime(Rational(3, 2))};
  const auto at_three_halves = certify_not_divisible(TNormSpec::minimum(), f, xi, kCertifyPieces, probe);
  const bool ok = at_three_halves && at_three_halves->witness == probe[0] &&
                  at_three_halves->gap >= kMinGapFloor;
  if (!ok) o.pass = false;
  o.detail += "min at t=3/2: gap " +
              (at_three_halves ? to_string(at_three_halves->gap) : std::string("none")) +
              " (need >= " + to_string(kMinGapFloor) + ")";
  return o;
}

Outcome rho_agreement() {
  Rng rng(kSeed + 108);
  int failures = 0;
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < kRhoPairs; ++i) {
      const Staircase phi = random_staircase(rng, 0, 4);
      const Staircase xi = random_staircase(rng, 0, 4);
      const Staircase imp = implication(t.spec, phi, xi);
      // Breakpoints first, then a uniform fill up to the pinned size.
      std::set<Rational> points;
      for (const Rational& s : probe_times({&phi, &xi, &imp})) {
        if (points.size() < kRhoGridPoints / 2) points.insert(s);
      }
      for (int k = 0; points.size() < kRhoGridPoints; ++k) points.insert(Rational(k, 7));
      std::vector<ExtendedTime> grid;
      for (const Rational& s : points) grid.emplace_back(s);
      const auto reg = regularized_rho_grid(t.spec, phi, xi, grid);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        if (reg[k] != eval(imp, grid[k])) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(failures) + " grid mismatches"};
}

Outcome finite_lab() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n) {
    const lab::FiniteQuantale q = lab::lukasiewicz_chain(n);
    const bool ok = lab::validate_quantale(q).holds && lab::verify_quantaloid_laws(q).holds &&
                    lab::check_downset_equality(q).equal_everywhere;
    if (!ok) o.pass = false;
    o.detail += "luk" + std::to_string(n) + (ok ? " ok; " : " FAILED; ");
  }
  const lab::FiniteQuantale d = lab::drastic_chain(4);
  const bool laws = lab::verify_quantaloid_laws(d).holds;
  const lab::Element b = d.index_of("b");
  const std::vector<lab::Element> expected_homset{d.index_of("0"), b};
  const std::vector<lab::Element> expected_downset{d.index_of("0"), d.index_of("a"), b};
  bool found = false;
  for (const lab::DownsetPair& pair : lab::check_downset_equality(d).pairs) {
    if (pair.p == b && pair.r == b) {
      found = pair.homset == expected_homset && pair.downset == expected_downset && !pair.equal;
    }
  }
  if (!laws || !found) o.pass = false;
  o.detail += std::string("drastic4 laws ") + (laws ? "hold" : "FAIL") + ", D(b,b)={0,b} vs {0,a,b} " +
              (found ? "reported" : "NOT reported");
  return o;
}

Outcome parmet_slices() {
  Rng rng(kSeed + 109);
  int failures = 0;
  for (int i = 0; i < kParMetInstances; ++i) {
    const metric::ParMetInstance m = random_parmet(rng);
    if (!metric::validate_parmet(m).valid) {
      ++failures;
      continue;
    }
    const metric::SlicedMetInstance s = metric::parmet_to_slice(m);
    if (!metric::validate_slice(s).valid) ++failures;
    if (metric::slice_to_parmet(s).dist != m.dist) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures"};
}

Outcome probparmet_validator() {
  Outcome o;
  const Rational half(1, 2);
  metric::ProbParMetInstance two{{"x", "y"},
                                 {{kappa(0, half), kappa(1, half)}, {kappa(1, half), Staircase::top()}},
                                 TNormSpec::minimum()};
  const bool two_ok = metric::validate_probparmet(two).valid;
  int embed_fail = 0;
  int perturb_missed = 0;
  int perturbed = 0;
  Rng rng(kSeed + 110);
  for (const NamedTNorm& t : suite_tnorms()) {
    for (int i = 0; i < kProbMetInstances; ++i) {
      const metric::ProbParMetInstance m = random_probmet(rng, t.spec);
      if (!metric::validate_probmet(m).valid || !metric::validate_probparmet(m).valid) ++embed_fail;
    }
    for (int i = 0; i < kProbParMetDraws; ++i) {
      metric::ProbParMetInstance m = random_probparmet(rng, t.spec);
      if (m.points.size() < 2 || !metric::validate_probparmet(m).valid) continue;
      if (meet(m.dist[0][0], m.dist[1][1]) == Staircase::top()) continue;
      m.dist[0][1] = Staircase::top();
      ++perturbed;
      bool flagged = false;
      for (const metric::Violation& v : metric::validate_probparmet(m).violations) {
        if (v.axiom == "ProbPM1") flagged = true;
      }
      if (!flagged) ++perturb_missed;
    }
  }
  two.dist[0][1] = kappa(1, 1);
  bool two_flagged = false;
  for (const metric::Violation& v : metric::validate_probparmet(two).violations) {
    if (v.axiom == "ProbPM1") two_flagged = true;
  }
  o.pass = two_ok && embed_fail == 0 && perturb_missed == 0 && two_flagged && perturbed > 0;
  o.detail = std::string("two-point ") + (two_ok ? "valid" : "INVALID") + ", " +
             std::to_string(embed_fail) + " ProbMet instances rejected, " +
             std::to_string(perturbed - perturb_missed) + "/" + std::to_string(perturbed) +
             " perturbations flagged, two-point perturbation " + (two_flagged ? "flagged" : "MISSED");
  return o;
}

/// A canonical staircase with exactly `n` steps and distinct rational data.
Staircase large_staircase(Rng& rng, int n) {
  std::set<Rational> jumps;
  std::set<Rational> levels;
  std::uniform_int_distribution<int> time(0, 100 * n);
  std::uniform_int_distribution<int> level(1, 1000 * n);
  while (static_cast<int>(jumps.size()) < n) jumps.insert(Rational(time(rng), 7));
  while (static_cast<int>(levels.size()) < n) {
    Rational a(level(rng), 1000 * n);
    a.canonicalize();
    levels.insert(a);
  }
  std::vector<Step> steps;
  auto j = jumps.begin();
  auto l = levels.begin();
  for (; j != jumps.end(); ++j, ++l) steps.push_back(Step{*j, *l});
  return Staircase::from_steps(std::move(steps));
}

Outcome performance() {
  Rng rng(kSeed + 111);
  Outcome o;
  for (const NamedTNorm& t : suite_tnorms()) {
    const Staircase a = large_staircase(rng, kLargeSteps);
    const Staircase b = large_staircase(rng, kLargeSteps);
    const Staircase c = large_staircase(rng, kConsequentSteps);
    auto start = Clock::now();
    const Staircase conv = convolve(t.spec, a, b);
    const double conv_s = seconds_since(start);
    start = Clock::now();
    const Staircase imp = implication(t.spec, a, c);
    const double imp_s = seconds_since(start);
    // Spot checks against the brute-force oracles.
    bool spot = true;
    for (const Rational& u : {Rational(1000), Rational(10000), Rational(50000, 3)}) {
      if (value_at(conv, u) != convolution_oracle(t.spec, a, b, u)) spot = false;
      if (value_at(imp, u) != implication_oracle(t.spec, a, c, u)) spot = false;
    }
    if (conv_s >= kConvolutionSeconds || imp_s >= kImplicationSeconds || !spot) o.pass = false;
    o.detail += t.name + ": conv " + seconds(conv_s) + ", imp " + seconds(imp_s) +
                (spot ? "" : " SPOT CHECK FAILED") + "; ";
  }
  o.detail += "limits " + seconds(kConvolutionSeconds) + " / " + seconds(kImplicationSeconds);
  return o;
}

/// Runs the CLI and returns stdout and the exit status.
std::pair<std::string, int> run_cli(const std::string& args) {
  const std::string command = std::string(QDIST_CLI) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) return {out, -1};
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) out.append(buffer.data(), n);
  const int status = pclose(pipe.release());
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string read_file(const std::string& path) {
  std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.c_str(), "rb"), std::fclose);
  std::string out;
  if (!file) return out;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), file.get())) > 0) out.append(buffer.data(), n);
  return out;
}

Outcome cli_golden() {
  const std::string dir = QDIST_TEST_DIR;
  struct Case {
    std::string args;
    std::string golden;
    int exit_code;
  };
  const std::vector<Case> cases{
      {"eval --tnorm prod 'conv(step(1,1/2),step(2,1/3))'", "eval_prod.txt", 0},
      {"diag --tnorm min --xi 'step(1,1)' --phi 'join(step(0,1/2),step(1,1))'", "diag_min.txt", 1},
      {"validate '" + dir + "/data/probparmet_two_point.json'", "validate_two_point.txt", 0}};
  Outcome o;
  for (const Case& c : cases) {
    const std::string expected = read_file(dir + "/golden/" + c.golden);
    // Two runs: byte equality with the golden file and between runs.
    const auto first = run_cli(c.args);
    const auto second = run_cli(c.args);
    const bool ok = !expected.empty() && first.first == expected && second == first &&
                    first.second == c.exit_code;
    if (!ok) o.pass = false;
    o.detail += c.golden + (ok ? " ok; " : " MISMATCH; ");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  std::string step_note;
  const std::vector<Criterion> criteria{
      {1, "step laws", [&] { return timed(kStepLawSeconds, [&] { return step_laws(step_note); }); }},
      {2, "adjunction", [] { return timed(kAdjunctionSeconds, adjunction); }},
      {3, "quantale laws", [] { return timed(kQuantaleSeconds, quantale_laws); }},
      {4, "regularization law", regularization},
      {5, "one-step divisibility", one_step_divisibility},
      {6, "only one-step downsets are divisible", only_one_step},
      {7, "flat criterion under min", flat_criterion},
      {8, "non-divisibility certificates", [] { return timed(kCertifySeconds, certificates); }},
      {9, "rho oracle agreement", rho_agreement},
      {10, "finite quantale oracle", [] { return timed(kLabSeconds, finite_lab); }},
      {11, "partial metrics as slices", parmet_slices},
      {12, "probabilistic partial metric validator", probparmet_validator},
      {13, "performance", performance},
      {14, "CLI golden files", cli_golden},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
              << o.detail << ")\n";
    if (c.id == 1 && !step_note.empty()) std::cout << "  note: " << step_note << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
