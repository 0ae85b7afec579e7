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
#include <vector>

namespace qdist::lab {

using Element = std::size_t;

/// Small commutative integral quantale given by explicit tables. Only the
/// shape of the tables is checked on construction; the algebraic laws are
/// the business of validate_quantale.
class FiniteQuantale {
 public:
  static constexpr std::size_t kDefaultCap = 8;

  /// Throws DomainError on ragged tables, duplicate labels, unknown labels or
  /// more than `cap` elements.
  static FiniteQuantale from_tables(std::vector<std::string> labels,
                                    std::vector<std::vector<bool>> leq,
                                    std::vector<std::vector<Element>> mult, Element unit,
                                    std::size_t cap = kDefaultCap);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  /// Throws DomainError for an unknown label.
  Element index_of(std::string_view label) const;

  bool leq(Element x, Element y) const { return leq_[x][y]; }
  Element mult(Element x, Element y) const { return mult_[x][y]; }
  Element unit() const noexcept { return unit_; }

 private:
  FiniteQuantale() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<Element>> mult_;
  Element unit_ = 0;
};

/// Łukasiewicz chain 0 < 1/(n-1) < ... < 1 with x (x) y = max(0, x+y-1).
FiniteQuantale lukasiewicz_chain(std::size_t n);
/// Chain with n elements and x (x) y = min(x, y).
FiniteQuantale minimum_chain(std::size_t n);
/// Chain 0 < a < b < ... < 1 where x (x) y = 0 unless one argument is 1.
/// The four-element instance is labelled 0, a, b, 1.
FiniteQuantale drastic_chain(std::size_t n);

/// `{"elements":[...], "leq":[[...]], "mult":[[...]], "unit":"1"}`; leq
/// entries are booleans (or 0/1), mult entries are element labels.
FiniteQuantale parse_quantale_json(std::string_view text, std::size_t cap = FiniteQuantale::kDefaultCap);

struct LawReport {
  bool holds = true;
  std::vector<std::string> violations;
};

/// Partial order, complete lattice, commutativity, associativity, unit is
/// top, and preservation of binary joins and bottom in each argument.
LawReport validate_quantale(const FiniteQuantale& q);

/// Join and meet; throw PreconditionError if they do not exist.
Element join(const FiniteQuantale& q, Element x, Element y);
Element meet(const FiniteQuantale& q, Element x, Element y);
Element bottom(const FiniteQuantale& q);

/// a -> b, the join of all r with a (x) r <= b.
Element residuate(const FiniteQuantale& q, Element a, Element b);

struct DiagonalHomset {
  Element source;
  Element target;
  std::vector<Element> members;
};

/// All d with (p -> d) (x) p = d = r (x) (r -> d), in index order.
DiagonalHomset diag_homset(const FiniteQuantale& q, Element p, Element r);

/// e . d for d : p -/-> mid and e : mid -/-> r, as (mid -> e) (x) d.
Element compose_diagonals(const FiniteQuantale& q, Element e, Element d, Element mid);

struct QuantaloidReport {
  bool holds = true;
  std::vector<std::string> violations;
  /// Pairs of diagonals whose join in Q falls outside their hom-set.
  std::vector<std::string> join_not_closed;
};

/// Exhaustive check of the diagonal quantaloid over q: both composition
/// formulas agree and land in the right hom-set, associativity, identities,
/// preservation of binary joins and bottom, containment in the down-set of
/// the meet, and the divisibility characterisation of hom-sets.
QuantaloidReport verify_quantaloid_laws(const FiniteQuantale& q);

struct DownsetPair {
  Element p;
  Element r;
  std::vector<Element> homset;
  std::vector<Element> downset;
  bool equal;
};

struct DownsetReport {
  /// q (x) (q -> d) = d whenever d <= q.
  bool divisible = true;
  bool equal_everywhere = true;
  std::vector<DownsetPair> pairs;
};

DownsetReport check_downset_equality(const FiniteQuantale& q);

/// Runs the three checks and renders them as a JSON object.
std::string report_json(const FiniteQuantale& q);

}  // namespace qdist::lab
