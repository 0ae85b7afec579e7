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

#include "qdist/qdist.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "qdist/delta.hpp"
#include "qdist/diagonal.hpp"
#include "qdist/enclosure.hpp"
#include "qdist/errors.hpp"
#include "qdist/expression.hpp"
#include "qdist/finite_quantale.hpp"
#include "qdist/metric.hpp"
#include "qdist/samples.hpp"

struct qdist_tnorm {
  qdist::TNormSpec value;
};

struct qdist_staircase {
  qdist::Staircase value;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

qdist_status fail(qdist_status status, const char* message, std::size_t line = 0,
                  std::size_t column = 0) {
  last_error = LastError{message, line, column};
  return status;
}

// Runs body and maps library exceptions onto status codes.
template <class Body>
qdist_status guarded(Body body) {
  try {
    last_error = LastError{};
    body();
    return QDIST_OK;
  } catch (const qdist::ParseError& e) {
    return fail(QDIST_PARSE_ERROR, e.what(), e.line(), e.column());
  } catch (const qdist::DomainError& e) {
    return fail(QDIST_DOMAIN_ERROR, e.what());
  } catch (const qdist::PreconditionError& e) {
    return fail(QDIST_PRECONDITION_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QDIST_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(QDIST_INTERNAL_ERROR, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qdist_staircase* wrap(qdist::Staircase phi) { return new qdist_staircase{std::move(phi)}; }

bool missing(std::initializer_list<const void*> pointers) {
  for (const void* p : pointers) {
    if (!p) return true;
  }
  return false;
}

qdist_status null_argument() { return fail(QDIST_INVALID_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

const char* qdist_version(void) { return "0.1.0"; }

const char* qdist_last_error(void) { return last_error.message.c_str(); }

void qdist_last_error_position(size_t* line, size_t* column) {
  if (line) *line = last_error.line;
  if (column) *column = last_error.column;
}

void qdist_string_free(char* s) { std::free(s); }

qdist_status qdist_tnorm_parse(const char* text, qdist_tnorm** out) {
  if (missing({text, out})) return null_argument();
  return guarded([&] { *out = new qdist_tnorm{qdist::parse_tnorm(text)}; });
}

qdist_status qdist_tnorm_to_string(const qdist_tnorm* t, char** out) {
  if (missing({t, out})) return null_argument();
  return guarded([&] { *out = duplicate(qdist::to_string(t->value)); });
}

void qdist_tnorm_free(qdist_tnorm* t) { delete t; }

qdist_status qdist_staircase_parse(const char* text, qdist_staircase** out) {
  if (missing({text, out})) return null_argument();
  return guarded([&] { *out = wrap(qdist::parse_staircase(text)); });
}

qdist_status qdist_expression_eval(const qdist_tnorm* t, const char* expression,
                                   qdist_staircase** out) {
  if (missing({t, expression, out})) return null_argument();
  return guarded(
      [&] { *out = wrap(qdist::evaluate(qdist::parse_expression(expression), t->value)); });
}

qdist_status qdist_expression_normalize(const char* expression, char** out) {
  if (missing({expression, out})) return null_argument();
  return guarded([&] { *out = duplicate(qdist::to_string(qdist::parse_expression(expression))); });
}

qdist_status qdist_staircase_to_string(const qdist_staircase* phi, char** out) {
  if (missing({phi, out})) return null_argument();
  return guarded([&] { *out = duplicate(qdist::to_string(phi->value)); });
}

qdist_status qdist_staircase_eval(const qdist_staircase* phi, const char* t, char** out) {
  if (missing({phi, t, out})) return null_argument();
  return guarded([&] {
    *out = duplicate(qdist::to_string(qdist::eval(phi->value, qdist::parse_time(t))));
  });
}

int qdist_staircase_equal(const qdist_staircase* a, const qdist_staircase* b) {
  return a && b && a->value == b->value;
}

int qdist_staircase_leq(const qdist_staircase* a, const qdist_staircase* b) {
  return a && b && qdist::leq(a->value, b->value);
}

void qdist_staircase_free(qdist_staircase* phi) { delete phi; }

qdist_status qdist_convolve(const qdist_tnorm* t, const qdist_staircase* phi,
                            const qdist_staircase* psi, qdist_staircase** out) {
  if (missing({t, phi, psi, out})) return null_argument();
  return guarded([&] { *out = wrap(qdist::convolve(t->value, phi->value, psi->value)); });
}

qdist_status qdist_implication(const qdist_tnorm* t, const qdist_staircase* phi,
                               const qdist_staircase* xi, qdist_staircase** out) {
  if (missing({t, phi, xi, out})) return null_argument();
  return guarded([&] { *out = wrap(qdist::implication(t->value, phi->value, xi->value)); });
}

qdist_status qdist_divisibility(const qdist_tnorm* t, const qdist_staircase* xi,
                                const qdist_staircase* phi, int* divisible,
                                qdist_staircase** quotient, qdist_staircase** residual) {
  if (missing({t, xi, phi, divisible})) return null_argument();
  return guarded([&] {
    qdist::DivisibilityReport r = qdist::divisibility(t->value, xi->value, phi->value);
    *divisible = r.divisible ? 1 : 0;
    if (quotient) *quotient = wrap(std::move(r.quotient));
    if (residual) *residual = wrap(std::move(r.residual));
  });
}

qdist_status qdist_is_diagonal(const qdist_tnorm* t, const qdist_staircase* xi,
                               const qdist_staircase* phi, const qdist_staircase* psi,
                               int* diagonal) {
  if (missing({t, xi, phi, psi, diagonal})) return null_argument();
  return guarded([&] {
    *diagonal = qdist::is_diagonal_between(t->value, xi->value, phi->value, psi->value) ? 1 : 0;
  });
}

qdist_status qdist_flat_criterion_min(const qdist_staircase* xi, const qdist_staircase* phi,
                                      int* holds, qdist_staircase** witness) {
  if (missing({xi, phi, holds})) return null_argument();
  return guarded([&] {
    qdist::FlatCriterion c = qdist::flat_criterion_min_detail(xi->value, phi->value);
    *holds = c.holds ? 1 : 0;
    if (witness) *witness = c.witness ? wrap(std::move(*c.witness)) : nullptr;
  });
}

qdist_status qdist_find_nondiagonal(const qdist_tnorm* t, const qdist_staircase* phi,
                                    uint64_t seed, qdist_nondiagonal_outcome* outcome,
                                    qdist_staircase** witness) {
  if (missing({t, phi, outcome})) return null_argument();
  return guarded([&] {
    qdist::NondiagonalSearchOptions options;
    options.seed = seed;
    qdist::NondiagonalSearch s = qdist::find_nondiagonal_below(t->value, phi->value, options);
    switch (s.outcome) {
      case qdist::NondiagonalOutcome::OneStep:
        *outcome = QDIST_NONDIAGONAL_ONE_STEP;
        break;
      case qdist::NondiagonalOutcome::Witness:
        *outcome = QDIST_NONDIAGONAL_WITNESS;
        break;
      case qdist::NondiagonalOutcome::SearchExhausted:
        *outcome = QDIST_NONDIAGONAL_SEARCH_EXHAUSTED;
        break;
    }
    if (witness) *witness = s.witness ? wrap(std::move(*s.witness)) : nullptr;
  });
}

qdist_status qdist_certify(const qdist_tnorm* t, const char* phi, const qdist_staircase* xi,
                           unsigned n, const char* const* probes, size_t nprobes,
                           qdist_certificate_verdict* verdict, char** witness, char** gap) {
  if (missing({t, phi, xi, verdict, witness, gap})) return null_argument();
  if (nprobes > 0 && !probes) return null_argument();
  return guarded([&] {
    *witness = nullptr;
    *gap = nullptr;
    const qdist::Expression e = qdist::parse_expression(phi);
    std::optional<qdist::NonDivisibilityCertificate> cert;
    bool exact = false;
    if (e.kind() == qdist::Expression::Kind::Linear) {
      if (n == 0) throw qdist::DomainError("resolution must be at least 1");
      if (nprobes > 0) {
        std::vector<qdist::ExtendedTime> times;
        for (size_t i = 0; i < nprobes; ++i) times.push_back(qdist::parse_time(probes[i]));
        cert = qdist::certify_not_divisible(t->value, e.distribution(), xi->value, n, times);
      } else {
        cert = qdist::certify_not_divisible(t->value, e.distribution(), xi->value, n);
      }
    } else {
      exact = true;
      cert = qdist::certify_not_divisible_exact(t->value, qdist::evaluate(e, t->value), xi->value);
    }
    if (cert) {
      *verdict = QDIST_CERT_NOT_DIVISIBLE;
      *witness = duplicate(qdist::to_string(cert->witness));
      *gap = duplicate(qdist::to_string(cert->gap));
    } else {
      *verdict = exact ? QDIST_CERT_DIVISIBLE : QDIST_CERT_INCONCLUSIVE;
    }
  });
}

qdist_status qdist_validate_instance_json(const char* json, int* valid, char** report) {
  if (missing({json, valid, report})) return null_argument();
  return guarded([&] {
    const qdist::metric::InstanceFile file = qdist::metric::parse_instance_json(json);
    const qdist::metric::Report r = qdist::metric::validate(file);
    *valid = r.valid ? 1 : 0;
    *report = duplicate(qdist::metric::report_json(file, r));
  });
}

namespace {

void quantale_report(const qdist::lab::FiniteQuantale& q, int* ok, char** report) {
  namespace lab = qdist::lab;
  bool good = lab::validate_quantale(q).holds;
  if (good) {
    const lab::DownsetReport d = lab::check_downset_equality(q);
    good = lab::verify_quantaloid_laws(q).holds && (!d.divisible || d.equal_everywhere);
  }
  *ok = good ? 1 : 0;
  *report = duplicate(lab::report_json(q));
}

}  // namespace

qdist_status qdist_quantale_check_json(const char* json, int* ok, char** report) {
  if (missing({json, ok, report})) return null_argument();
  return guarded([&] { quantale_report(qdist::lab::parse_quantale_json(json), ok, report); });
}

qdist_status qdist_quantale_check_builtin(const char* family, size_t n, int* ok, char** report) {
  if (missing({family, ok, report})) return null_argument();
  return guarded([&] {
    const std::string name = family;
    if (name == "luk") {
      quantale_report(qdist::lab::lukasiewicz_chain(n), ok, report);
    } else if (name == "min") {
      quantale_report(qdist::lab::minimum_chain(n), ok, report);
    } else if (name == "drastic") {
      quantale_report(qdist::lab::drastic_chain(n), ok, report);
    } else {
      throw qdist::DomainError("unknown quantale family '" + name + "'");
    }
  });
}

qdist_status qdist_export_samples(const qdist_tnorm* t, const char* expression, unsigned grid,
                                  char** csv) {
  if (missing({t, expression, csv})) return null_argument();
  return guarded([&] {
    const qdist::Expression e = qdist::parse_expression(expression);
    if (e.kind() == qdist::Expression::Kind::Linear) {
      *csv = duplicate(qdist::export_samples(e.distribution(), grid));
    } else {
      *csv = duplicate(qdist::export_samples(qdist::evaluate(e, t->value), grid));
    }
  });
}

}  // extern "C"
