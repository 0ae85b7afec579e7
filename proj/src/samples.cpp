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

#include "qdist/samples.hpp"

#include <algorithm>
#include <vector>

#include "qdist/errors.hpp"

namespace qdist {

namespace {

template <class Eval>
std::string render(std::vector<Rational> breaks, unsigned grid, Eval value_at) {
  if (grid == 0) throw DomainError("sample grid must have at least one cell");
  breaks.insert(breaks.begin(), Rational(0));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Rational> times = breaks;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    times.push_back((breaks[i] + breaks[i + 1]) / 2);
  }
  const Rational end = breaks.back() + 1;
  times.push_back((breaks.back() + end) / 2);
  for (unsigned k = 0; k <= grid; ++k) times.push_back(end * k / grid);
  for (Rational& t : times) t.canonicalize();
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  std::string out = "t,value\n";
  for (const Rational& t : times) {
    out += to_string(t) + ',' + to_string(value_at(ExtendedTime(t))) + '\n';
  }
  out += "inf," + to_string(value_at(ExtendedTime::infinity())) + '\n';
  return out;
}

}  // namespace

std::string export_samples(const Staircase& phi, unsigned grid) {
  std::vector<Rational> breaks;
  for (const Step& s : phi.steps()) breaks.push_back(s.jump);
  return render(std::move(breaks), grid,
                [&](const ExtendedTime& t) { return eval(phi, t).value(); });
}

std::string export_samples(const PiecewiseLinearDistribution& f, unsigned grid) {
  std::vector<Rational> breaks;
  for (const LinearKnot& k : f.knots()) breaks.push_back(k.time);
  return render(std::move(breaks), grid, [&](const ExtendedTime& t) { return f.eval(t); });
}

}  // namespace qdist
