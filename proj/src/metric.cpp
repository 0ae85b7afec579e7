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

#include "qdist/metric.hpp"

#include <json.hpp>

#include "qdist/delta.hpp"
#include "qdist/diagonal.hpp"
#include "qdist/errors.hpp"
#include "qdist/expression.hpp"

namespace qdist::metric {

namespace {

template <class Matrix>
void check_square(std::size_t n, const Matrix& dist, const char* what) {
  if (dist.size() != n) throw DomainError(std::string(what) + " must have one row per point");
  for (const auto& row : dist) {
    if (row.size() != n) throw DomainError(std::string(what) + " must be square");
  }
}

void add(Report& report, std::string axiom, std::vector<std::size_t> indices, std::string lhs,
         std::string rhs) {
  report.valid = false;
  report.violations.push_back(
      Violation{std::move(axiom), std::move(indices), std::move(lhs), std::move(rhs)});
}

ClassicalFlags numeric_flags(const std::vector<std::vector<ExtendedTime>>& a) {
  ClassicalFlags flags{true, true, true};
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a[x][y] != a[y][x]) flags.symmetric = false;
      if (a[x][y].is_infinite()) flags.finitary = false;
      if (x != y && a[x][x] == a[y][y] && a[x][x] == a[x][y] && a[x][y] == a[y][x]) {
        flags.separated = false;
      }
    }
  }
  return flags;
}

ClassicalFlags staircase_flags(const std::vector<std::vector<Staircase>>& a) {
  ClassicalFlags flags{true, true, true};
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a[x][y] != a[y][x]) flags.symmetric = false;
      if (a[x][y].final_level() != 1) flags.finitary = false;
      if (x != y && a[x][x] == a[y][y] && a[x][x] == a[x][y] && a[x][y] == a[y][x]) {
        flags.separated = false;
      }
    }
  }
  return flags;
}

// Numeric check of the metric triangle law a(x,z) <= a(y,z) + a(x,y).
void triangle(Report& report, const std::vector<std::vector<ExtendedTime>>& a, const char* axiom) {
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ExtendedTime bound = a[y][z] + a[x][y];
        if (a[x][z] > bound) add(report, axiom, {x, y, z}, to_string(a[x][z]), to_string(bound));
      }
    }
  }
}

}  // namespace

void check_shape(const ParMetInstance& m) { check_square(m.points.size(), m.dist, "distance matrix"); }

void check_shape(const ProbParMetInstance& m) {
  check_square(m.points.size(), m.dist, "distance matrix");
}

void check_shape(const SlicedMetInstance& s) {
  check_square(s.points.size(), s.base, "base matrix");
  if (s.anchor.size() != s.points.size()) throw DomainError("anchor must have one entry per point");
}

Report validate_met(const ParMetInstance& m) {
  check_shape(m);
  Report report;
  for (std::size_t x = 0; x < m.points.size(); ++x) {
    if (m.dist[x][x] != ExtendedTime()) add(report, "M1", {x}, to_string(m.dist[x][x]), "0");
  }
  triangle(report, m.dist, "M2");
  report.flags = numeric_flags(m.dist);
  return report;
}

Report validate_parmet(const ParMetInstance& m) {
  check_shape(m);
  Report report;
  const auto& a = m.dist;
  const std::size_t n = m.points.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ExtendedTime& self = std::max(a[x][x], a[y][y]);
      if (self > a[x][y]) add(report, "PM1", {x, y}, to_string(self), to_string(a[x][y]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ExtendedTime bound = truncated_difference(a[y][z], a[y][y]) + a[x][y];
        if (a[x][z] > bound) add(report, "PM2", {x, y, z}, to_string(a[x][z]), to_string(bound));
      }
    }
  }
  report.flags = numeric_flags(a);
  return report;
}

Report validate_probmet(const ProbParMetInstance& m) {
  check_shape(m);
  Report report;
  const auto& a = m.dist;
  const std::size_t n = m.points.size();
  const Staircase unit = Staircase::top();
  for (std::size_t x = 0; x < n; ++x) {
    if (a[x][x] != unit) add(report, "ProbM1", {x}, to_string(a[x][x]), to_string(unit));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Staircase lhs = convolve(m.tnorm, a[y][z], a[x][y]);
        if (!leq(lhs, a[x][z])) add(report, "ProbM2", {x, y, z}, to_string(lhs), to_string(a[x][z]));
      }
    }
  }
  report.flags = staircase_flags(a);
  return report;
}

Report validate_probparmet(const ProbParMetInstance& m) {
  check_shape(m);
  Report report;
  const auto& a = m.dist;
  const std::size_t n = m.points.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // Divisibility by each endpoint; the witness is the fixed-point residual.
      for (std::size_t end : {x, y}) {
        const DivisibilityReport d = divisibility(m.tnorm, a[x][y], a[end][end]);
        if (!d.divisible) add(report, "ProbPM1", {x, y, end}, to_string(a[x][y]), to_string(d.residual));
      }
    }
  }
  std::vector<std::vector<Staircase>> quotient(n, std::vector<Staircase>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) quotient[x][y] = implication(m.tnorm, a[y][y], a[x][y]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Staircase lhs = convolve(m.tnorm, a[y][z], quotient[x][y]);
        if (!leq(lhs, a[x][z])) {
          add(report, "ProbPM2", {x, y, z}, to_string(lhs), to_string(a[x][z]));
        }
      }
    }
  }
  report.flags = staircase_flags(a);
  return report;
}

Report validate_slice(const SlicedMetInstance& s) {
  check_shape(s);
  Report report = validate_met(ParMetInstance{s.points, s.base});
  const std::size_t n = s.points.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ExtendedTime pi = truncated_difference(s.anchor[y], s.anchor[x]);
      if (s.base[x][y] < pi) add(report, "anchor", {x, y}, to_string(s.base[x][y]), to_string(pi));
    }
  }
  return report;
}

namespace {

void require_parmet(const ParMetInstance& m) {
  const Report r = validate_parmet(m);
  if (!r.valid) throw PreconditionError("input is not a partial metric (" + r.violations.front().axiom + ")");
}

void require_probparmet(const ProbParMetInstance& m) {
  const Report r = validate_probparmet(m);
  if (!r.valid) {
    throw PreconditionError("input is not a probabilistic partial metric (" +
                            r.violations.front().axiom + ")");
  }
}

}  // namespace

ParMetInstance globalize_forward(const ParMetInstance& m) {
  require_parmet(m);
  ParMetInstance out = m;
  for (std::size_t x = 0; x < m.points.size(); ++x) {
    for (std::size_t y = 0; y < m.points.size(); ++y) {
      out.dist[x][y] = truncated_difference(m.dist[x][y], m.dist[x][x]);
    }
  }
  return out;
}

ParMetInstance globalize_backward(const ParMetInstance& m) {
  require_parmet(m);
  ParMetInstance out = m;
  for (std::size_t x = 0; x < m.points.size(); ++x) {
    for (std::size_t y = 0; y < m.points.size(); ++y) {
      out.dist[x][y] = truncated_difference(m.dist[x][y], m.dist[y][y]);
    }
  }
  return out;
}

ProbParMetInstance globalize_forward(const ProbParMetInstance& m) {
  require_probparmet(m);
  ProbParMetInstance out = m;
  for (std::size_t x = 0; x < m.points.size(); ++x) {
    for (std::size_t y = 0; y < m.points.size(); ++y) {
      out.dist[x][y] = implication(m.tnorm, m.dist[x][x], m.dist[x][y]);
    }
  }
  return out;
}

ProbParMetInstance globalize_backward(const ProbParMetInstance& m) {
  require_probparmet(m);
  ProbParMetInstance out = m;
  for (std::size_t x = 0; x < m.points.size(); ++x) {
    for (std::size_t y = 0; y < m.points.size(); ++y) {
      out.dist[x][y] = implication(m.tnorm, m.dist[y][y], m.dist[x][y]);
    }
  }
  return out;
}

namespace {

template <class Instance, class IsUnit>
Instance restrict_to(const Instance& m, IsUnit is_unit) {
  check_shape(m);
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < m.points.size(); ++x) {
    if (is_unit(m.dist[x][x])) keep.push_back(x);
  }
  Instance out = m;
  out.points.clear();
  out.dist.assign(keep.size(), {});
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.points.push_back(m.points[keep[i]]);
    for (std::size_t j : keep) out.dist[i].push_back(m.dist[keep[i]][j]);
  }
  return out;
}

}  // namespace

ParMetInstance coreflect(const ParMetInstance& m) {
  return restrict_to(m, [](const ExtendedTime& d) { return d == ExtendedTime(); });
}

ProbParMetInstance coreflect(const ProbParMetInstance& m) {
  return restrict_to(m, [](const Staircase& d) { return d == Staircase::top(); });
}

SlicedMetInstance parmet_to_slice(const ParMetInstance& m) {
  require_parmet(m);
  const std::size_t n = m.points.size();
  SlicedMetInstance s{m.points, m.dist, {}};
  for (std::size_t x = 0; x < n; ++x) {
    s.anchor.push_back(m.dist[x][x]);
    for (std::size_t y = 0; y < n; ++y) s.base[x][y] = truncated_difference(m.dist[x][y], m.dist[x][x]);
  }
  return s;
}

ParMetInstance slice_to_parmet(const SlicedMetInstance& s) {
  const Report r = validate_slice(s);
  if (!r.valid) throw PreconditionError("invalid slice (" + r.violations.front().axiom + ")");
  ParMetInstance m{s.points, s.base};
  for (std::size_t x = 0; x < s.points.size(); ++x) {
    for (std::size_t y = 0; y < s.points.size(); ++y) m.dist[x][y] = s.base[x][y] + s.anchor[x];
  }
  return m;
}

namespace {

using nlohmann::json;

InstanceKind kind_of(const std::string& name) {
  if (name == "met") return InstanceKind::Met;
  if (name == "parmet") return InstanceKind::ParMet;
  if (name == "probmet") return InstanceKind::ProbMet;
  if (name == "probparmet") return InstanceKind::ProbParMet;
  throw DomainError("unknown instance kind '" + name + "'");
}

const char* name_of(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Met:
      return "met";
    case InstanceKind::ParMet:
      return "parmet";
    case InstanceKind::ProbMet:
      return "probmet";
    case InstanceKind::ProbParMet:
      return "probparmet";
  }
  return "";
}

std::string entry_text(const json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_number_unsigned()) return std::to_string(cell.get<std::uint64_t>());
  throw DomainError("distances must be strings or non-negative integers");
}

}  // namespace

InstanceFile parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what(), 1, e.byte);
  }
  try {
    InstanceFile file{kind_of(doc.at("kind").get<std::string>()), ParMetInstance{}, {}};
    auto points = doc.at("points").get<std::vector<std::string>>();
    const json& rows = doc.at("dist");
    if (doc.contains("require")) {
      const json& req = doc.at("require");
      file.required.symmetric = req.value("symmetric", false);
      file.required.finitary = req.value("finitary", false);
      file.required.separated = req.value("separated", false);
    }
    if (file.kind == InstanceKind::Met || file.kind == InstanceKind::ParMet) {
      ParMetInstance m{std::move(points), {}};
      for (const json& row : rows) {
        auto& out = m.dist.emplace_back();
        for (const json& cell : row) out.push_back(parse_time(entry_text(cell)));
      }
      check_shape(m);
      file.instance = std::move(m);
    } else {
      ProbParMetInstance m{std::move(points), {}, parse_tnorm(doc.value("tnorm", "min"))};
      for (const json& row : rows) {
        auto& out = m.dist.emplace_back();
        for (const json& cell : row) {
          out.push_back(evaluate(parse_expression(entry_text(cell)), m.tnorm));
        }
      }
      check_shape(m);
      file.instance = std::move(m);
    }
    return file;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed instance: ") + e.what());
  }
}

Report validate(const InstanceFile& file) {
  Report report;
  switch (file.kind) {
    case InstanceKind::Met:
      report = validate_met(std::get<ParMetInstance>(file.instance));
      break;
    case InstanceKind::ParMet:
      report = validate_parmet(std::get<ParMetInstance>(file.instance));
      break;
    case InstanceKind::ProbMet:
      report = validate_probmet(std::get<ProbParMetInstance>(file.instance));
      break;
    case InstanceKind::ProbParMet:
      report = validate_probparmet(std::get<ProbParMetInstance>(file.instance));
      break;
  }
  if (file.required.symmetric && !report.flags.symmetric) add(report, "symmetry", {}, "", "");
  if (file.required.finitary && !report.flags.finitary) add(report, "finiteness", {}, "", "");
  if (file.required.separated && !report.flags.separated) add(report, "separatedness", {}, "", "");
  return report;
}

std::string report_json(const InstanceFile& file, const Report& report) {
  const auto& points = std::visit([](const auto& m) -> const std::vector<std::string>& { return m.points; },
                                  file.instance);
  nlohmann::ordered_json out;
  out["kind"] = name_of(file.kind);
  out["valid"] = report.valid;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    std::vector<std::string> labels;
    for (std::size_t i : v.indices) labels.push_back(points.at(i));
    violations.push_back({{"axiom", v.axiom},
                          {"indices", v.indices},
                          {"points", labels},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs}});
  }
  out["violations"] = violations;
  out["flags"] = {{"symmetric", report.flags.symmetric},
                  {"finitary", report.flags.finitary},
                  {"separated", report.flags.separated}};
  return out.dump(2);
}

}  // namespace qdist::metric
