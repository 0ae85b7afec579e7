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

#include "qdist/finite_quantale.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include <json.hpp>

#include "qdist/errors.hpp"
#include "qdist/numbers.hpp"

namespace qdist::lab {

FiniteQuantale FiniteQuantale::from_tables(std::vector<std::string> labels,
                                           std::vector<std::vector<bool>> leq,
                                           std::vector<std::vector<Element>> mult, Element unit,
                                           std::size_t cap) {
  const std::size_t n = labels.size();
  if (n == 0) throw DomainError("a quantale needs at least one element");
  if (n > cap) {
    throw DomainError("quantale has " + std::to_string(n) + " elements, cap is " +
                      std::to_string(cap));
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw DomainError("duplicate element label");
  }
  if (leq.size() != n || mult.size() != n) throw DomainError("tables must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || mult[i].size() != n) throw DomainError("tables must be n x n");
    for (Element v : mult[i]) {
      if (v >= n) throw DomainError("multiplication table names an unknown element");
    }
  }
  if (unit >= n) throw DomainError("unknown unit element");
  FiniteQuantale q;
  q.labels_ = std::move(labels);
  q.leq_ = std::move(leq);
  q.mult_ = std::move(mult);
  q.unit_ = unit;
  return q;
}

Element FiniteQuantale::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw DomainError("unknown element '" + std::string(label) + "'");
  return static_cast<Element>(it - labels_.begin());
}

namespace {

template <class Mult>
FiniteQuantale chain(std::size_t n, std::vector<std::string> labels, Mult mult) {
  if (n < 2) throw DomainError("a chain needs at least two elements");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      leq[i][j] = i <= j;
      table[i][j] = mult(i, j);
    }
  }
  return FiniteQuantale::from_tables(std::move(labels), std::move(leq), std::move(table), n - 1,
                                     std::max(n, FiniteQuantale::kDefaultCap));
}

std::vector<std::string> fraction_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(to_string(Rational(static_cast<long>(i), static_cast<long>(n - 1))));
  }
  return labels;
}

}  // namespace

FiniteQuantale lukasiewicz_chain(std::size_t n) {
  return chain(n, n < 2 ? std::vector<std::string>{} : fraction_labels(n),
               [n](Element i, Element j) { return i + j >= n - 1 ? i + j - (n - 1) : 0; });
}

FiniteQuantale minimum_chain(std::size_t n) {
  return chain(n, n < 2 ? std::vector<std::string>{} : fraction_labels(n),
               [](Element i, Element j) { return std::min(i, j); });
}

FiniteQuantale drastic_chain(std::size_t n) {
  std::vector<std::string> labels;
  if (n == 4) {
    labels = {"0", "a", "b", "1"};
  } else if (n >= 2) {
    labels = fraction_labels(n);
  }
  return chain(n, std::move(labels), [n](Element i, Element j) -> Element {
    if (i == n - 1) return j;
    if (j == n - 1) return i;
    return 0;
  });
}

FiniteQuantale parse_quantale_json(std::string_view text, std::size_t cap) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; recover line and column from it.
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed quantale JSON", line, column);
  }
  try {
    std::vector<std::string> labels = doc.at("elements").get<std::vector<std::string>>();
    auto find = [&](const std::string& label) -> Element {
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) throw DomainError("unknown element '" + label + "'");
      return static_cast<Element>(it - labels.begin());
    };
    std::vector<std::vector<bool>> leq;
    for (const json& row : doc.at("leq")) {
      std::vector<bool>& out = leq.emplace_back();
      for (const json& cell : row) {
        if (cell.is_boolean()) {
          out.push_back(cell.get<bool>());
        } else if (cell.is_number_integer() && (cell == 0 || cell == 1)) {
          out.push_back(cell == 1);
        } else {
          throw DomainError("leq entries must be booleans or 0/1");
        }
      }
    }
    std::vector<std::vector<Element>> mult;
    for (const json& row : doc.at("mult")) {
      std::vector<Element>& out = mult.emplace_back();
      for (const json& cell : row) out.push_back(find(cell.get<std::string>()));
    }
    Element unit = find(doc.at("unit").get<std::string>());
    return FiniteQuantale::from_tables(std::move(labels), std::move(leq), std::move(mult), unit,
                                       cap);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed quantale tables: ") + e.what());
  }
}

namespace {

std::optional<Element> try_join(const FiniteQuantale& q, Element x, Element y) {
  for (Element z = 0; z < q.size(); ++z) {
    if (!q.leq(x, z) || !q.leq(y, z)) continue;
    bool least = true;
    for (Element w = 0; w < q.size() && least; ++w) {
      if (q.leq(x, w) && q.leq(y, w) && !q.leq(z, w)) least = false;
    }
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<Element> try_meet(const FiniteQuantale& q, Element x, Element y) {
  for (Element z = 0; z < q.size(); ++z) {
    if (!q.leq(z, x) || !q.leq(z, y)) continue;
    bool greatest = true;
    for (Element w = 0; w < q.size() && greatest; ++w) {
      if (q.leq(w, x) && q.leq(w, y) && !q.leq(w, z)) greatest = false;
    }
    if (greatest) return z;
  }
  return std::nullopt;
}

std::optional<Element> try_bottom(const FiniteQuantale& q) {
  for (Element z = 0; z < q.size(); ++z) {
    bool below_all = true;
    for (Element w = 0; w < q.size() && below_all; ++w) below_all = q.leq(z, w);
    if (below_all) return z;
  }
  return std::nullopt;
}

std::string tuple(const FiniteQuantale& q, std::initializer_list<Element> xs) {
  std::string out = "(";
  bool first = true;
  for (Element x : xs) {
    if (!first) out += ',';
    first = false;
    out += q.label(x);
  }
  return out + ')';
}

void violate(LawReport& report, std::string what) {
  report.holds = false;
  report.violations.push_back(std::move(what));
}

}  // namespace

LawReport validate_quantale(const FiniteQuantale& q) {
  LawReport report;
  const std::size_t n = q.size();
  for (Element x = 0; x < n; ++x) {
    if (!q.leq(x, x)) violate(report, "reflexivity " + tuple(q, {x}));
    for (Element y = 0; y < n; ++y) {
      if (x != y && q.leq(x, y) && q.leq(y, x)) violate(report, "antisymmetry " + tuple(q, {x, y}));
      for (Element z = 0; z < n; ++z) {
        if (q.leq(x, y) && q.leq(y, z) && !q.leq(x, z)) {
          violate(report, "transitivity " + tuple(q, {x, y, z}));
        }
      }
    }
  }
  if (!report.holds) return report;

  // A finite poset with bottom and binary joins is a complete lattice.
  const std::optional<Element> bot = try_bottom(q);
  if (!bot) violate(report, "no bottom element");
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!try_join(q, x, y)) violate(report, "missing join " + tuple(q, {x, y}));
    }
  }
  if (!report.holds) return report;

  for (Element x = 0; x < n; ++x) {
    if (!q.leq(x, q.unit())) violate(report, "integrality: unit is not above " + q.label(x));
    if (q.mult(q.unit(), x) != x) violate(report, "unit " + tuple(q, {x}));
    if (q.mult(x, *bot) != *bot) violate(report, "bottom preservation " + tuple(q, {x}));
    for (Element y = 0; y < n; ++y) {
      if (q.mult(x, y) != q.mult(y, x)) violate(report, "commutativity " + tuple(q, {x, y}));
      for (Element z = 0; z < n; ++z) {
        if (q.mult(q.mult(x, y), z) != q.mult(x, q.mult(y, z))) {
          violate(report, "associativity " + tuple(q, {x, y, z}));
        }
        const Element lhs = q.mult(x, *try_join(q, y, z));
        const Element rhs = *try_join(q, q.mult(x, y), q.mult(x, z));
        if (lhs != rhs) violate(report, "join distribution " + tuple(q, {x, y, z}));
      }
    }
  }
  return report;
}

Element join(const FiniteQuantale& q, Element x, Element y) {
  if (auto z = try_join(q, x, y)) return *z;
  throw PreconditionError("join of " + q.label(x) + " and " + q.label(y) + " does not exist");
}

Element meet(const FiniteQuantale& q, Element x, Element y) {
  if (auto z = try_meet(q, x, y)) return *z;
  throw PreconditionError("meet of " + q.label(x) + " and " + q.label(y) + " does not exist");
}

Element bottom(const FiniteQuantale& q) {
  if (auto z = try_bottom(q)) return *z;
  throw PreconditionError("quantale has no bottom element");
}

Element residuate(const FiniteQuantale& q, Element a, Element b) {
  Element acc = bottom(q);
  for (Element r = 0; r < q.size(); ++r) {
    if (q.leq(q.mult(a, r), b)) acc = join(q, acc, r);
  }
  return acc;
}

DiagonalHomset diag_homset(const FiniteQuantale& q, Element p, Element r) {
  DiagonalHomset out{p, r, {}};
  for (Element d = 0; d < q.size(); ++d) {
    if (q.mult(residuate(q, p, d), p) == d && q.mult(r, residuate(q, r, d)) == d) {
      out.members.push_back(d);
    }
  }
  return out;
}

Element compose_diagonals(const FiniteQuantale& q, Element e, Element d, Element mid) {
  return q.mult(residuate(q, mid, e), d);
}

namespace {

bool contains(const std::vector<Element>& xs, Element x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

void violate(QuantaloidReport& report, std::string what) {
  report.holds = false;
  report.violations.push_back(std::move(what));
}

}  // namespace

QuantaloidReport verify_quantaloid_laws(const FiniteQuantale& q) {
  QuantaloidReport report;
  const std::size_t n = q.size();
  std::vector<std::vector<std::vector<Element>>> hom(n, std::vector<std::vector<Element>>(n));
  for (Element p = 0; p < n; ++p) {
    for (Element r = 0; r < n; ++r) hom[p][r] = diag_homset(q, p, r).members;
  }

  // Hom-sets: below the meet, and equal to the elements divisible by both ends.
  for (Element p = 0; p < n; ++p) {
    for (Element r = 0; r < n; ++r) {
      const Element m = meet(q, p, r);
      std::vector<Element> divisible;
      for (Element d = 0; d < n; ++d) {
        bool by_p = false;
        bool by_r = false;
        for (Element x = 0; x < n; ++x) {
          by_p = by_p || q.mult(p, x) == d;
          by_r = by_r || q.mult(r, x) == d;
        }
        if (by_p && by_r) divisible.push_back(d);
      }
      if (divisible != hom[p][r]) {
        violate(report, "hom-set differs from the common multiples " + tuple(q, {p, r}));
      }
      for (Element d : hom[p][r]) {
        if (!q.leq(d, m)) violate(report, "diagonal above meet " + tuple(q, {p, r, d}));
      }
      if (!contains(hom[p][r], bottom(q))) {
        violate(report, "bottom is not a diagonal " + tuple(q, {p, r}));
      }
    }
  }

  for (Element p = 0; p < n; ++p) {
    for (Element mid = 0; mid < n; ++mid) {
      if (!contains(hom[mid][mid], mid)) violate(report, "missing identity " + tuple(q, {mid}));
      for (Element d : hom[p][mid]) {
        if (compose_diagonals(q, mid, d, mid) != d) {
          violate(report, "left identity " + tuple(q, {p, mid, d}));
        }
      }
      for (Element d : hom[mid][p]) {
        if (compose_diagonals(q, d, mid, mid) != d) {
          violate(report, "right identity " + tuple(q, {mid, p, d}));
        }
      }
      for (Element r = 0; r < n; ++r) {
        for (Element d : hom[p][mid]) {
          for (Element e : hom[mid][r]) {
            const Element left = compose_diagonals(q, e, d, mid);
            const Element right = q.mult(e, residuate(q, mid, d));
            if (left != right) violate(report, "composition formulas differ " + tuple(q, {p, mid, r, d, e}));
            if (!contains(hom[p][r], left)) {
              violate(report, "composite outside hom-set " + tuple(q, {p, mid, r, d, e}));
            }
            for (Element s = 0; s < n; ++s) {
              for (Element f : hom[r][s]) {
                const Element a = compose_diagonals(q, f, left, r);
                const Element b = compose_diagonals(q, compose_diagonals(q, f, e, r), d, mid);
                if (a != b) violate(report, "associativity " + tuple(q, {p, mid, r, s, d, e, f}));
              }
            }
          }
        }
        // Joins of diagonals, computed in Q.
        const auto& ds = hom[p][mid];
        for (std::size_t i = 0; i < ds.size(); ++i) {
          for (std::size_t j = i + 1; j < ds.size(); ++j) {
            const Element dj = join(q, ds[i], ds[j]);
            if (!contains(ds, dj)) {
              if (r == 0) {
                report.join_not_closed.push_back(tuple(q, {p, mid, ds[i], ds[j]}));
              }
              continue;
            }
            for (Element e : hom[mid][r]) {
              const Element lhs = compose_diagonals(q, e, dj, mid);
              const Element rhs = join(q, compose_diagonals(q, e, ds[i], mid),
                                       compose_diagonals(q, e, ds[j], mid));
              if (lhs != rhs) {
                violate(report, "join preservation " + tuple(q, {p, mid, r, ds[i], ds[j], e}));
              }
            }
          }
        }
        for (Element e : hom[mid][r]) {
          if (compose_diagonals(q, e, bottom(q), mid) != bottom(q)) {
            violate(report, "bottom preservation " + tuple(q, {p, mid, r, e}));
          }
        }
      }
    }
  }
  return report;
}

DownsetReport check_downset_equality(const FiniteQuantale& q) {
  DownsetReport report;
  const std::size_t n = q.size();
  for (Element x = 0; x < n; ++x) {
    for (Element d = 0; d < n; ++d) {
      if (q.leq(d, x) && q.mult(x, residuate(q, x, d)) != d) report.divisible = false;
    }
  }
  for (Element p = 0; p < n; ++p) {
    for (Element r = 0; r < n; ++r) {
      DownsetPair pair{p, r, diag_homset(q, p, r).members, {}, false};
      const Element m = meet(q, p, r);
      for (Element d = 0; d < n; ++d) {
        if (q.leq(d, m)) pair.downset.push_back(d);
      }
      pair.equal = pair.homset == pair.downset;
      report.equal_everywhere = report.equal_everywhere && pair.equal;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

std::string report_json(const FiniteQuantale& q) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["elements"] = q.labels();
  const LawReport laws = validate_quantale(q);
  out["quantale"] = {{"valid", laws.holds}, {"violations", laws.violations}};
  if (!laws.holds) return out.dump(2);

  const QuantaloidReport quantaloid = verify_quantaloid_laws(q);
  out["quantaloid"] = {{"holds", quantaloid.holds},
                       {"violations", quantaloid.violations},
                       {"join_not_closed", quantaloid.join_not_closed}};

  const DownsetReport downsets = check_downset_equality(q);
  auto names = [&](const std::vector<Element>& xs) {
    std::vector<std::string> out;
    for (Element x : xs) out.push_back(q.label(x));
    return out;
  };
  ordered_json pairs = ordered_json::array();
  for (const DownsetPair& pair : downsets.pairs) {
    pairs.push_back({{"p", q.label(pair.p)},
                     {"r", q.label(pair.r)},
                     {"homset", names(pair.homset)},
                     {"downset", names(pair.downset)},
                     {"equal", pair.equal}});
  }
  out["downsets"] = {{"divisible", downsets.divisible},
                     {"equal_everywhere", downsets.equal_everywhere},
                     {"pairs", pairs}};
  return out.dump(2);
}

}  // namespace qdist::lab
