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

#include <span>
#include <vector>

#include "qdist/numbers.hpp"
#include "qdist/staircase.hpp"
#include "qdist/tnorm.hpp"

namespace qdist {

/// (phi (x) psi)(t) = sup_{r+s=t} phi(r) * psi(s), computed as the upper
/// envelope of the pairwise one-step products kappa_{p+q, a*b}.
Staircase convolve(const TNormSpec& t, const Staircase& phi, const Staircase& psi);

/// Convolution of arbitrary monotone step maps. Finite times use
/// sup_{s<=t} m1(s) * m2(t-s); the value at infinity is m1(inf) * m2(inf).
MonotoneStep convolve_monotone(const TNormSpec& t, const MonotoneStep& m1,
                               const MonotoneStep& m2);

/// Right adjoint of convolution: phi (x) psi <= xi iff psi <= phi => xi.
///
/// Computed as the meet, over the canonical steps (p,a) of phi, of
/// kappa_{p,a} => xi.
Staircase implication(const TNormSpec& t, const Staircase& phi, const Staircase& xi);

/// kappa_{p,a} => xi: xi shifted left by p, residuated pointwise by a, then
/// regularised. Throws DomainError for p = inf.
Staircase step_implication(const TNormSpec& t, const ExtendedTime& p, const UnitRational& a,
                           const Staircase& xi);

struct RhoBounds {
  UnitRational lower;
  UnitRational upper;
};

/// rho(phi,xi)(t) = inf_{q>0} phi(q) ->_* xi(q+t) at each grid point, by
/// enumerating the cells of q cut out by the jumps of phi and of xi shifted
/// left by t. The value is exact, so lower == upper.
std::vector<RhoBounds> rho_grid(const TNormSpec& t, const Staircase& phi, const Staircase& xi,
                                std::span<const ExtendedTime> grid);

/// sup_{s<t} rho(phi,xi)(s) at each grid point, i.e. the left limit of the
/// monotone map rho. Independent route to eval(phi => xi, t).
std::vector<UnitRational> regularized_rho_grid(const TNormSpec& t, const Staircase& phi,
                                               const Staircase& xi,
                                               std::span<const ExtendedTime> grid);

}  // namespace qdist
