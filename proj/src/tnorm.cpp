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

#include "qdist/tnorm.hpp"

#include <algorithm>

#include "qdist/errors.hpp"
#include "text_reader.hpp"

namespace qdist {

TNormSpec::TNormSpec(std::vector<TNormPiece> pieces) : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].lo < pieces_[i].hi)) {
      throw DomainError("ordinal-sum piece (" + to_string(pieces_[i].lo) + "," +
                        to_string(pieces_[i].hi) + ") is empty");
    }
    if (i > 0 && pieces_[i].lo < pieces_[i - 1].hi) {
      throw DomainError("ordinal-sum pieces must be sorted and disjoint");
    }
  }
}

TNormSpec TNormSpec::product() {
  return TNormSpec({TNormPiece{UnitRational::zero(), UnitRational::one(), PieceKind::Product}});
}

TNormSpec TNormSpec::lukasiewicz() {
  return TNormSpec(
      {TNormPiece{UnitRational::zero(), UnitRational::one(), PieceKind::Lukasiewicz}});
}

const TNormPiece* TNormSpec::piece_containing(const Rational& a, const Rational& b) const {
  for (const auto& piece : pieces_) {
    const Rational& lo = piece.lo.value();
    const Rational& hi = piece.hi.value();
    if (lo <= a && a <= hi && lo <= b && b <= hi) return &piece;
  }
  return nullptr;
}

Rational TNormSpec::apply(const Rational& a, const Rational& b) const {
  if (!pieces_.empty()) {
    if (const TNormPiece* piece = piece_containing(a, b)) {
      const Rational& lo = piece->lo.value();
      const Rational& hi = piece->hi.value();
      if (piece->kind == PieceKind::Product) {
        // lo + (hi-lo) * x * y with x = (a-lo)/(hi-lo), y = (b-lo)/(hi-lo)
        if (lo == 0 && hi == 1) return a * b;
        return Rational(lo + (a - lo) * (b - lo) / (hi - lo));
      }
      Rational sum = a + b - hi;
      return sum > lo ? sum : Rational(lo);
    }
  }
  return a < b ? a : b;
}

Rational TNormSpec::implies(const Rational& a, const Rational& b) const {
  if (a <= b) return Rational(1);
  for (const auto& piece : pieces_) {
    const Rational& lo = piece.lo.value();
    const Rational& hi = piece.hi.value();
    if (lo <= b && a <= hi) {
      if (piece.kind == PieceKind::Product) {
        if (lo == 0 && hi == 1) return Rational(b / a);
        return Rational(lo + (hi - lo) * (b - lo) / (a - lo));
      }
      return Rational(hi - a + b);
    }
  }
  return b;
}

UnitRational tnorm_apply(const TNormSpec& t, const UnitRational& a, const UnitRational& b) {
  return UnitRational(t.apply(a.value(), b.value()));
}

UnitRational tnorm_implies(const TNormSpec& t, const UnitRational& a, const UnitRational& b) {
  return UnitRational(t.implies(a.value(), b.value()));
}

bool is_idempotent(const TNormSpec& t, const UnitRational& a) {
  return std::none_of(t.pieces().begin(), t.pieces().end(), [&](const TNormPiece& p) {
    return p.lo < a && a < p.hi;
  });
}

TNormSpec parse_tnorm(std::string_view text) {
  detail::TextReader in(text, "t-norm descriptor");
  const std::string_view head = in.identifier();
  TNormSpec result;
  if (head == "min") {
    result = TNormSpec::minimum();
  } else if (head == "prod") {
    result = TNormSpec::product();
  } else if (head == "luk") {
    result = TNormSpec::lukasiewicz();
  } else if (head == "ordinal") {
    std::vector<TNormPiece> pieces;
    in.expect('[');
    if (!in.accept(']')) {
      do {
        in.expect('(');
        TNormPiece piece;
        piece.lo = in.unit();
        in.expect(',');
        piece.hi = in.unit();
        in.expect(',');
        const std::string_view kind = in.identifier();
        if (kind == "prod") {
          piece.kind = PieceKind::Product;
        } else if (kind == "luk") {
          piece.kind = PieceKind::Lukasiewicz;
        } else {
          in.fail("unknown piece kind '" + std::string(kind) + "'");
        }
        in.expect(')');
        pieces.push_back(std::move(piece));
      } while (in.accept(','));
      in.expect(']');
    }
    result = TNormSpec(std::move(pieces));
  } else {
    in.fail("unknown t-norm '" + std::string(head) + "'");
  }
  if (!in.at_end()) in.fail("trailing input");
  return result;
}

std::string to_string(const TNormSpec& t) {
  if (t == TNormSpec::minimum()) return "min";
  if (t == TNormSpec::product()) return "prod";
  if (t == TNormSpec::lukasiewicz()) return "luk";
  std::string out = "ordinal[";
  for (std::size_t i = 0; i < t.pieces().size(); ++i) {
    const auto& p = t.pieces()[i];
    if (i) out += ',';
    out += '(' + to_string(p.lo) + ',' + to_string(p.hi) + ',' +
           (p.kind == PieceKind::Product ? "prod" : "luk") + ')';
  }
  return out + ']';
}

}  // namespace qdist
