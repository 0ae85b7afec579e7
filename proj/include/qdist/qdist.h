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

/* C interface to the qdist library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char** are heap allocated and released with
 * qdist_string_free. Every function returns a status; on failure the
 * message of the calling thread's last error is available through
 * qdist_last_error. */
#ifndef QDIST_QDIST_H
#define QDIST_QDIST_H

#include <stddef.h>
#include <stdint.h>

#if defined(QDIST_BUILDING_LIBRARY)
#define QDIST_API __attribute__((visibility("default")))
#else
#define QDIST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdist_status {
  QDIST_OK = 0,
  QDIST_PARSE_ERROR = 1,        /* malformed text; see qdist_last_error_position */
  QDIST_DOMAIN_ERROR = 2,       /* value outside the domain of an operation */
  QDIST_PRECONDITION_ERROR = 3, /* documented precondition violated */
  QDIST_INVALID_ARGUMENT = 4,   /* null pointer or unusable argument */
  QDIST_INTERNAL_ERROR = 5
} qdist_status;

typedef struct qdist_tnorm qdist_tnorm;
typedef struct qdist_staircase qdist_staircase;

QDIST_API const char* qdist_version(void);

/* Message of the last failure on this thread, or "" after success. */
QDIST_API const char* qdist_last_error(void);
/* 1-based position of the last parse error, 0 when not a parse error. */
QDIST_API void qdist_last_error_position(size_t* line, size_t* column);

QDIST_API void qdist_string_free(char* s);

/* "min", "prod", "luk" or "ordinal[(lo,hi,prod|luk),...]". */
QDIST_API qdist_status qdist_tnorm_parse(const char* text, qdist_tnorm** out);
QDIST_API qdist_status qdist_tnorm_to_string(const qdist_tnorm* t, char** out);
QDIST_API void qdist_tnorm_free(qdist_tnorm* t);

/* Canonical "steps[(p,a),...]" text. */
QDIST_API qdist_status qdist_staircase_parse(const char* text, qdist_staircase** out);
/* Evaluates an expression such as "conv(step(1,1/2),step(2,1/3))". */
QDIST_API qdist_status qdist_expression_eval(const qdist_tnorm* t, const char* expression,
                                             qdist_staircase** out);
/* Canonical text of an expression, which may be a linear[...] distribution. */
QDIST_API qdist_status qdist_expression_normalize(const char* expression, char** out);
QDIST_API qdist_status qdist_staircase_to_string(const qdist_staircase* phi, char** out);
/* Value at time "t" (a rational or "inf") as canonical rational text. */
QDIST_API qdist_status qdist_staircase_eval(const qdist_staircase* phi, const char* t, char** out);
QDIST_API int qdist_staircase_equal(const qdist_staircase* a, const qdist_staircase* b);
QDIST_API int qdist_staircase_leq(const qdist_staircase* a, const qdist_staircase* b);
QDIST_API void qdist_staircase_free(qdist_staircase* phi);

QDIST_API qdist_status qdist_convolve(const qdist_tnorm* t, const qdist_staircase* phi,
                                      const qdist_staircase* psi, qdist_staircase** out);
QDIST_API qdist_status qdist_implication(const qdist_tnorm* t, const qdist_staircase* phi,
                                         const qdist_staircase* xi, qdist_staircase** out);

/* Divisibility of xi by phi. quotient (phi => xi) and residual
 * (phi (x) (phi => xi)) are optional outputs and may be null. */
QDIST_API qdist_status qdist_divisibility(const qdist_tnorm* t, const qdist_staircase* xi,
                                          const qdist_staircase* phi, int* divisible,
                                          qdist_staircase** quotient, qdist_staircase** residual);
QDIST_API qdist_status qdist_is_diagonal(const qdist_tnorm* t, const qdist_staircase* xi,
                                         const qdist_staircase* phi, const qdist_staircase* psi,
                                         int* diagonal);
/* Minimum t-norm criterion on flat maps; witness may be null. */
QDIST_API qdist_status qdist_flat_criterion_min(const qdist_staircase* xi,
                                                const qdist_staircase* phi, int* holds,
                                                qdist_staircase** witness);

typedef enum qdist_nondiagonal_outcome {
  QDIST_NONDIAGONAL_ONE_STEP = 0,
  QDIST_NONDIAGONAL_WITNESS = 1,
  QDIST_NONDIAGONAL_SEARCH_EXHAUSTED = 2
} qdist_nondiagonal_outcome;

/* Searches for xi <= phi not divisible by phi; witness is set only for
 * QDIST_NONDIAGONAL_WITNESS. */
QDIST_API qdist_status qdist_find_nondiagonal(const qdist_tnorm* t, const qdist_staircase* phi,
                                              uint64_t seed, qdist_nondiagonal_outcome* outcome,
                                              qdist_staircase** witness);

typedef enum qdist_certificate_verdict {
  QDIST_CERT_DIVISIBLE = 0,     /* exact staircase phi, xi divisible */
  QDIST_CERT_NOT_DIVISIBLE = 1, /* certificate found */
  QDIST_CERT_INCONCLUSIVE = 2
} qdist_certificate_verdict;

/* phi is an expression: linear[...] uses an enclosure at resolution n,
 * anything else is decided exactly. probes (nprobes entries, may be null)
 * restrict the certificate search for linear phi. witness and gap are set
 * when the verdict is QDIST_CERT_NOT_DIVISIBLE. */
QDIST_API qdist_status qdist_certify(const qdist_tnorm* t, const char* phi,
                                     const qdist_staircase* xi, unsigned n,
                                     const char* const* probes, size_t nprobes,
                                     qdist_certificate_verdict* verdict, char** witness,
                                     char** gap);

/* Instance file → JSON report; valid receives 1 or 0. */
QDIST_API qdist_status qdist_validate_instance_json(const char* json, int* valid, char** report);

/* Quantale table file → JSON report; ok is 1 when every law holds. */
QDIST_API qdist_status qdist_quantale_check_json(const char* json, int* ok, char** report);
/* Built-in chains: "luk", "min" or "drastic" with n elements. */
QDIST_API qdist_status qdist_quantale_check_builtin(const char* family, size_t n, int* ok,
                                                    char** report);

/* CSV samples of an expression (staircase or linear[...]). */
QDIST_API qdist_status qdist_export_samples(const qdist_tnorm* t, const char* expression,
                                            unsigned grid, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* QDIST_QDIST_H */
