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

#include "qdist/enclosure.hpp"
#include "qdist/staircase.hpp"

namespace qdist {

/// CSV with header `t,value`: every breakpoint, the midpoint of every cell,
/// and `grid` + 1 evenly spaced times from 0 to one past the last breakpoint,
/// in increasing order without duplicates, followed by an `inf` row.
/// Throws DomainError for grid == 0.
std::string export_samples(const Staircase& phi, unsigned grid);
std::string export_samples(const PiecewiseLinearDistribution& f, unsigned grid);

}  // namespace qdist
