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

#include <string>
#include <vector>

#include "oracles.hpp"
#include "qdist/delta.hpp"
#include "qdist/metric.hpp"

namespace qdist::testing {

/// Random partial metric: anchors a(x) and a metric d built as the shortest
/// path closure of random edges; then a(x,y) = d(x,y) + max(a(x), a(y)).
inline metric::ParMetInstance random_parmet(Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
  std::vector<ExtendedTime> anchor;
  for (std::size_t i = 0; i < n; ++i) {
    anchor.push_back(uniform(rng, 0, 5) == 0 ? ExtendedTime::infinity() : ExtendedTime(random_time(rng, 3)));
  }
  std::vector<std::vector<ExtendedTime>> d(n, std::vector<ExtendedTime>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      d[x][y] = uniform(rng, 0, 6) == 0 ? ExtendedTime::infinity() : ExtendedTime(random_time(rng, 4));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) d[x][y] = std::min(d[x][y], d[x][k] + d[k][y]);
    }
  }
  metric::ParMetInstance m;
  for (std::size_t i = 0; i < n; ++i) m.points.push_back("p" + std::to_string(i));
  m.dist.assign(n, std::vector<ExtendedTime>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) m.dist[x][y] = d[x][y] + std::max(anchor[x], anchor[y]);
  }
  return m;
}

/// Random probabilistic metric: convolution closure of random distances.
inline metric::ProbParMetInstance random_probmet(Rng& rng, const TNormSpec& t) {
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
  metric::ProbParMetInstance m{{}, std::vector<std::vector<Staircase>>(n, std::vector<Staircase>(n)), t};
  for (std::size_t i = 0; i < n; ++i) m.points.push_back("p" + std::to_string(i));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      m.dist[x][y] = x == y ? Staircase::top() : random_staircase(rng, 1, 3);
    }
  }
  for (int round = 0; round < 3; ++round) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          m.dist[x][y] = join(m.dist[x][y], convolve(t, m.dist[k][y], m.dist[x][k]));
        }
      }
    }
  }
  return m;
}

/// A candidate partial instance: the meet of a random probabilistic metric
/// with one-step self distances. Callers keep only the valid draws.
inline metric::ProbParMetInstance random_probparmet(Rng& rng, const TNormSpec& t) {
  metric::ProbParMetInstance m = random_probmet(rng, t);
  const std::size_t n = m.points.size();
  std::vector<Staircase> self;
  for (std::size_t x = 0; x < n; ++x) {
    self.push_back(one_step(ExtendedTime(0), UnitRational(random_level(rng, true))));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      m.dist[x][y] = x == y ? self[x] : meet(m.dist[x][y], meet(self[x], self[y]));
    }
  }
  return m;
}

}  // namespace qdist::testing
