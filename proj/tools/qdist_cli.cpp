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

// Command-line front end. Talks to the library through the C interface only.
//
// Exit codes: 0 success, valid or divisible; 1 invalid, not divisible or
// certified negative; 2 inconclusive or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qdist/qdist.h"

namespace {

constexpr int kSuccess = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct TNormFree {
  void operator()(qdist_tnorm* t) const { qdist_tnorm_free(t); }
};
struct StaircaseFree {
  void operator()(qdist_staircase* s) const { qdist_staircase_free(s); }
};
struct StringFree {
  void operator()(char* s) const { qdist_string_free(s); }
};

using TNorm = std::unique_ptr<qdist_tnorm, TNormFree>;
using Stair = std::unique_ptr<qdist_staircase, StaircaseFree>;
using CString = std::unique_ptr<char, StringFree>;

/// Carries a library failure to main, which reports it and exits with 2.
struct Failure {
  std::string message;
};

void check(qdist_status status) {
  if (status != QDIST_OK) throw Failure{qdist_last_error()};
}

TNorm tnorm(const std::string& text) {
  qdist_tnorm* t = nullptr;
  check(qdist_tnorm_parse(text.c_str(), &t));
  return TNorm(t);
}

Stair staircase(const qdist_tnorm* t, const std::string& expression) {
  qdist_staircase* s = nullptr;
  check(qdist_expression_eval(t, expression.c_str(), &s));
  return Stair(s);
}

std::string text(const qdist_staircase* s) {
  char* out = nullptr;
  check(qdist_staircase_to_string(s, &out));
  return CString(out).get();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw Failure{"cannot write '" + path + "'"};
}

struct Divisibility {
  bool divisible;
  std::string quotient;
  std::string residual;
};

Divisibility divide(const qdist_tnorm* t, const qdist_staircase* xi, const qdist_staircase* phi) {
  int divisible = 0;
  qdist_staircase* quotient = nullptr;
  qdist_staircase* residual = nullptr;
  check(qdist_divisibility(t, xi, phi, &divisible, &quotient, &residual));
  Stair q(quotient);
  Stair r(residual);
  return Divisibility{divisible != 0, text(q.get()), text(r.get())};
}

int run_eval(const std::string& tn, const std::string& expression) {
  const TNorm t = tnorm(tn);
  char* normalized = nullptr;
  check(qdist_expression_normalize(expression.c_str(), &normalized));
  const std::string canonical = CString(normalized).get();
  // A bare continuous distribution has no staircase value; print it as is.
  if (canonical.rfind("linear[", 0) == 0) {
    std::cout << canonical << '\n';
    return kSuccess;
  }
  const Stair value = staircase(t.get(), expression);
  std::cout << text(value.get()) << '\n';
  return kSuccess;
}

int run_diag(const std::string& tn, const std::string& xi_text, const std::string& phi_text,
             const std::optional<std::string>& psi_text) {
  const TNorm t = tnorm(tn);
  const Stair xi = staircase(t.get(), xi_text);
  const Stair phi = staircase(t.get(), phi_text);
  const Divisibility by_phi = divide(t.get(), xi.get(), phi.get());
  if (!psi_text) {
    std::cout << (by_phi.divisible ? "divisible" : "not divisible") << '\n'
              << "xi: " << text(xi.get()) << '\n'
              << "quotient: " << by_phi.quotient << '\n'
              << "residual: " << by_phi.residual << '\n';
    return by_phi.divisible ? kSuccess : kNegative;
  }
  const Stair psi = staircase(t.get(), *psi_text);
  const Divisibility by_psi = divide(t.get(), xi.get(), psi.get());
  const bool diagonal = by_phi.divisible && by_psi.divisible;
  std::cout << (diagonal ? "diagonal" : "not a diagonal") << '\n'
            << "xi: " << text(xi.get()) << '\n'
            << "phi: " << (by_phi.divisible ? "divisible" : "not divisible") << '\n'
            << "phi quotient: " << by_phi.quotient << '\n'
            << "phi residual: " << by_phi.residual << '\n'
            << "psi: " << (by_psi.divisible ? "divisible" : "not divisible") << '\n'
            << "psi quotient: " << by_psi.quotient << '\n'
            << "psi residual: " << by_psi.residual << '\n';
  return diagonal ? kSuccess : kNegative;
}

int run_witness(const std::string& tn, const std::string& phi_text, std::uint64_t seed) {
  const TNorm t = tnorm(tn);
  const Stair phi = staircase(t.get(), phi_text);
  qdist_nondiagonal_outcome outcome{};
  qdist_staircase* raw = nullptr;
  check(qdist_find_nondiagonal(t.get(), phi.get(), seed, &outcome, &raw));
  const Stair witness(raw);
  switch (outcome) {
    case QDIST_NONDIAGONAL_ONE_STEP:
      std::cout << "one-step: every distribution below phi is a diagonal\n";
      return kSuccess;
    case QDIST_NONDIAGONAL_WITNESS:
      std::cout << "witness: " << text(witness.get()) << '\n';
      return kNegative;
    case QDIST_NONDIAGONAL_SEARCH_EXHAUSTED:
      std::cout << "search exhausted\n";
      return kInputError;
  }
  return kInputError;
}

int run_validate(const std::string& path) {
  const std::string json = read_file(path);
  int valid = 0;
  char* report = nullptr;
  check(qdist_validate_instance_json(json.c_str(), &valid, &report));
  std::cout << CString(report).get() << '\n';
  return valid ? kSuccess : kNegative;
}

int run_certify(const std::string& tn, const std::string& phi, const std::string& xi_text,
                unsigned n, const std::vector<std::string>& probes) {
  const TNorm t = tnorm(tn);
  const Stair xi = staircase(t.get(), xi_text);
  std::vector<const char*> probe_ptrs;
  for (const std::string& p : probes) probe_ptrs.push_back(p.c_str());
  qdist_certificate_verdict verdict{};
  char* witness = nullptr;
  char* gap = nullptr;
  check(qdist_certify(t.get(), phi.c_str(), xi.get(), n, probe_ptrs.data(), probe_ptrs.size(),
                      &verdict, &witness, &gap));
  const CString w(witness);
  const CString g(gap);
  switch (verdict) {
    case QDIST_CERT_DIVISIBLE:
      std::cout << "divisible\n";
      return kSuccess;
    case QDIST_CERT_NOT_DIVISIBLE:
      std::cout << "not divisible\nwitness: " << w.get() << "\ngap: " << g.get() << '\n';
      return kNegative;
    case QDIST_CERT_INCONCLUSIVE:
      std::cout << "inconclusive\n";
      return kInputError;
  }
  return kInputError;
}

int run_quantale_check(const std::string& path, const std::string& builtin) {
  int ok = 0;
  char* report = nullptr;
  if (!builtin.empty()) {
    const auto colon = builtin.find(':');
    if (colon == std::string::npos) throw Failure{"--builtin expects family:size, e.g. luk:3"};
    std::size_t size = 0;
    try {
      size = std::stoul(builtin.substr(colon + 1));
    } catch (const std::exception&) {
      throw Failure{"malformed size in --builtin '" + builtin + "'"};
    }
    check(qdist_quantale_check_builtin(builtin.substr(0, colon).c_str(), size, &ok, &report));
  } else {
    if (path.empty()) throw Failure{"quantale-check needs a table file or --builtin"};
    const std::string json = read_file(path);
    check(qdist_quantale_check_json(json.c_str(), &ok, &report));
  }
  std::cout << CString(report).get() << '\n';
  return ok ? kSuccess : kNegative;
}

int run_export(const std::string& tn, const std::string& expression, unsigned grid,
               const std::string& out) {
  const TNorm t = tnorm(tn);
  char* csv = nullptr;
  check(qdist_export_samples(t.get(), expression.c_str(), grid, &csv));
  write_output(out, CString(csv).get());
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-step distance distributions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qdist_version()));

  std::string tn = "min";
  auto add_tnorm = [&](CLI::App* cmd) {
    cmd->add_option("--tnorm", tn, "min, prod, luk or ordinal[(lo,hi,prod|luk),...]")
        ->capture_default_str();
  };

  std::function<int()> action;

  std::string expression;
  auto* eval = app.add_subcommand("eval", "Print the canonical value of an expression");
  add_tnorm(eval);
  eval->add_option("expression", expression)->required();
  eval->callback([&] { action = [&] { return run_eval(tn, expression); }; });

  std::string xi;
  std::string phi;
  std::optional<std::string> psi;
  auto* diag = app.add_subcommand("diag", "Decide divisibility of xi by phi (and psi)");
  add_tnorm(diag);
  diag->add_option("--xi", xi)->required();
  diag->add_option("--phi", phi)->required();
  diag->add_option("--psi", psi, "Also decide whether xi is a diagonal between phi and psi");
  diag->callback([&] { action = [&] { return run_diag(tn, xi, phi, psi); }; });

  std::uint64_t seed = 20190101;
  auto* witness = app.add_subcommand("witness", "Find a non-divisible distribution below phi");
  add_tnorm(witness);
  witness->add_option("--phi", phi)->required();
  witness->add_option("--seed", seed, "Seed of the randomized search")->capture_default_str();
  witness->callback([&] { action = [&] { return run_witness(tn, phi, seed); }; });

  std::string path;
  auto* validate = app.add_subcommand("validate", "Validate a (probabilistic) metric instance");
  validate->add_option("instance", path, "JSON instance file")->required();
  validate->callback([&] { action = [&] { return run_validate(path); }; });

  unsigned resolution = 128;
  std::vector<std::string> probes;
  auto* certify = app.add_subcommand("certify", "Certify that xi is not divisible by phi");
  add_tnorm(certify);
  certify->add_option("--phi", phi, "linear[...] or a staircase expression")->required();
  certify->add_option("--xi", xi)->required();
  certify->add_option("-n,--resolution", resolution, "Cells per linear segment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  certify->add_option("--probe", probes, "Restrict the search to these times");
  certify->callback([&] {
    action = [&] { return run_certify(tn, phi, xi, resolution, probes); };
  });

  std::string builtin;
  auto* quantale = app.add_subcommand("quantale-check", "Check a finite quantale and its diagonals");
  quantale->add_option("table", path, "JSON table file");
  quantale->add_option("--builtin", builtin, "luk:N, min:N or drastic:N");
  quantale->callback([&] { action = [&] { return run_quantale_check(path, builtin); }; });

  unsigned grid = 16;
  std::string out;
  auto* samples = app.add_subcommand("export-samples", "Write CSV samples of an expression");
  add_tnorm(samples);
  samples->add_option("expression", expression)->required();
  samples->add_option("--grid", grid, "Uniform grid cells")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  samples->add_option("--out", out, "Output file (default: stdout)");
  samples->callback([&] { action = [&] { return run_export(tn, expression, grid, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "qdist: error: " << f.message << '\n';
    return kInputError;
  }
}
