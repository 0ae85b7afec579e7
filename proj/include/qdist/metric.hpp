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

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qdist/numbers.hpp"
#include "qdist/staircase.hpp"
#include "qdist/tnorm.hpp"

namespace qdist::metric {

/// Finite (partial) metric over the quantale [0,inf] with + as tensor.
/// Its quantale order is the reverse of the numeric order; validator code
/// states every comparison numerically.
struct ParMetInstance {
  std::vector<std::string> points;
  std::vector<std::vector<ExtendedTime>> dist;
};

/// Finite (partial) probabilistic metric with staircase distances.
struct ProbParMetInstance {
  std::vector<std::string> points;
  std::vector<std::vector<Staircase>> dist;
  TNormSpec tnorm;
};

/// A metric together with a functor `anchor` into ([0,inf], pi), where
/// pi(a,b) = b - a truncated at 0.
struct SlicedMetInstance {
  std::vector<std::string> points;
  std::vector<std::vector<ExtendedTime>> base;
  std::vector<ExtendedTime> anchor;
};

/// Optional classical conditions.
struct ClassicalFlags {
  bool symmetric = false;
  bool finitary = false;
  bool separated = false;
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  bool valid = true;
  /// In lexicographic order of indices within each axiom.
  std::vector<Violation> violations;
  ClassicalFlags flags;
};

/// Throws DomainError on a non-square matrix or a label count mismatch.
void check_shape(const ParMetInstance& m);
void check_shape(const ProbParMetInstance& m);
void check_shape(const SlicedMetInstance& s);

/// M1 a(x,x) = 0 and M2 a(x,z) <= a(y,z) + a(x,y).
Report validate_met(const ParMetInstance& m);
/// PM1 a(x,x) v a(y,y) <= a(x,y) and PM2 a(x,z) <= (a(y,z) - a(y,y)) + a(x,y),
/// where inf - inf = 0 and the difference is truncated at 0.
Report validate_parmet(const ParMetInstance& m);
/// ProbM1 a(x,x) is the unit and ProbM2 a(y,z) (x) a(x,y) <= a(x,z).
Report validate_probmet(const ProbParMetInstance& m);
/// ProbPM1 a(x,y) is a diagonal between a(x,x) and a(y,y), and
/// ProbPM2 a(y,z) (x) (a(y,y) => a(x,y)) <= a(x,z).
Report validate_probparmet(const ProbParMetInstance& m);
/// The base validates as a metric and a(x,y) >= pi(anchor x, anchor y)
/// numerically, i.e. below it in the quantale order.
Report validate_slice(const SlicedMetInstance& s);

/// Residuate every entry by the source (forward) or target (backward)
/// self-distance. Throw PreconditionError unless the input validates as a
/// partial metric.
ParMetInstance globalize_forward(const ParMetInstance& m);
ParMetInstance globalize_backward(const ParMetInstance& m);
ProbParMetInstance globalize_forward(const ProbParMetInstance& m);
ProbParMetInstance globalize_backward(const ProbParMetInstance& m);

/// Restriction to the points with unit self-distance.
ParMetInstance coreflect(const ParMetInstance& m);
ProbParMetInstance coreflect(const ProbParMetInstance& m);

/// anchor x = a(x,x), base(x,y) = a(x,y) - a(x,x). PreconditionError unless
/// m is a valid partial metric.
SlicedMetInstance parmet_to_slice(const ParMetInstance& m);
/// a(x,y) = base(x,y) + anchor x. PreconditionError unless s validates.
ParMetInstance slice_to_parmet(const SlicedMetInstance& s);

enum class InstanceKind { Met, ParMet, ProbMet, ProbParMet };

/// A parsed instance file:
///   {"kind": "met"|"parmet"|"probmet"|"probparmet",
///    "points": [...], "tnorm": "min", "dist": [[...]],
///    "require": {"symmetric": bool, "finitary": bool, "separated": bool}}
/// Distances are rational strings or "inf" for the numeric kinds and
/// expressions such as "steps[(1,1/2)]" or "step(1,1/2)" otherwise.
struct InstanceFile {
  InstanceKind kind;
  std::variant<ParMetInstance, ProbParMetInstance> instance;
  ClassicalFlags required;
};

InstanceFile parse_instance_json(std::string_view text);

/// Runs the validator matching the file's kind. Required classical flags that
/// fail are reported as violations.
Report validate(const InstanceFile& file);

/// `{"kind":..., "valid":..., "violations":[{"axiom","indices","lhs","rhs"}],
///   "flags":{...}}` with point labels in place of indices.
std::string report_json(const InstanceFile& file, const Report& report);

}  // namespace qdist::metric
