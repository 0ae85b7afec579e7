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
#include <string_view>
#include <vector>

#include "qdist/numbers.hpp"

namespace qdist {

enum class PieceKind { Product, Lukasiewicz };

/// One summand of an ordinal sum: on [lo,hi] the t-norm is an affinely
/// rescaled copy of the product or Lukasiewicz t-norm.
struct TNormPiece {
  UnitRational lo;
  UnitRational hi;
  PieceKind kind = PieceKind::Product;

  friend bool operator==(const TNormPiece&, const TNormPiece&) = default;
};

/// A continuous t-norm given as a finite ordinal sum over the minimum.
///
/// Pieces are sorted, with pairwise disjoint open intervals (lo,hi). An empty
/// piece list is the minimum t-norm.
class TNormSpec {
 public:
  TNormSpec() = default;

  /// Throws DomainError if pieces are empty intervals, unsorted or overlap.
  explicit TNormSpec(std::vector<TNormPiece> pieces);

  static TNormSpec minimum() { return TNormSpec(); }
  static TNormSpec product();
  static TNormSpec lukasiewicz();

  const std::vector<TNormPiece>& pieces() const noexcept { return pieces_; }

  /// a * b on raw rationals already known to lie in [0,1].
  Rational apply(const Rational& a, const Rational& b) const;

  /// a ->_* b = max{c : a * c <= b} on raw rationals in [0,1].
  Rational implies(const Rational& a, const Rational& b) const;

  friend bool operator==(const TNormSpec&, const TNormSpec&) = default;

 private:
  const TNormPiece* piece_containing(const Rational& a, const Rational& b) const;

  std::vector<TNormPiece> pieces_;
};

UnitRational tnorm_apply(const TNormSpec& t, const UnitRational& a,
                         const UnitRational& b);
UnitRational tnorm_implies(const TNormSpec& t, const UnitRational& a,
                           const UnitRational& b);

/// True iff a * a = a, i.e. a lies outside every open piece.
bool is_idempotent(const TNormSpec& t, const UnitRational& a);

/// Descriptors: `min`, `prod`, `luk`, `ordinal[(lo,hi,prod|luk),...]`.
TNormSpec parse_tnorm(std::string_view text);
std::string to_string(const TNormSpec& t);

}  // namespace qdist
