// Copyright 2026 The Urysohn Toolkit Authors
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

/*
 * C interface to the Urysohn toolkit.
 *
 * Points are addressed by label. Distances cross the boundary as exact
 * rational strings ("p/q", "0", "1"). Every function returns a ury_status;
 * on failure ury_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * ury_string_free. Structured results are JSON documents.
 */
#ifndef URYSOHN_URYSOHN_H
#define URYSOHN_URYSOHN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(URYSOHN_BUILDING)
#    define URY_API __declspec(dllexport)
#  else
#    define URY_API __declspec(dllimport)
#  endif
#else
#  define URY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ury_status {
  URY_OK = 0,
  URY_ERR_PARSE = 1,        /* malformed document or rational */
  URY_ERR_LOOKUP = 2,       /* unknown point label */
  URY_ERR_INVARIANT = 3,    /* e.g. a triangle inequality fails */
  URY_ERR_PRECONDITION = 4, /* e.g. extending a dependent type */
  URY_ERR_ARGUMENT = 5,     /* bad argument such as n = 0 or NULL */
  URY_ERR_INTERNAL = 6
} ury_status;

typedef struct ury_space ury_space;       /* finite (pseudo)metric space */
typedef struct ury_partial ury_partial;   /* partial semimetric */
typedef struct ury_template ury_template; /* indiscernible sequence data */

typedef struct ury_labels {
  const char* const* items;
  size_t len;
  int present; /* 0 when the role is absent from the document */
} ury_labels;

/* Role annotations of a space document. Pointers stay valid while the
 * space lives. */
typedef struct ury_roles {
  ury_labels A;
  ury_labels B;
  ury_labels C;
  const char* b_star; /* NULL when absent */
} ury_roles;

/* Parameters of a one-point extension problem. */
typedef struct ury_problem {
  const char* const* A;
  size_t A_len;
  const char* const* B;
  size_t B_len;
  const char* const* C;
  size_t C_len;
  const char* b_star;
} ury_problem;

URY_API const char* ury_version(void);
URY_API const char* ury_last_error(void);
URY_API void ury_string_free(char* s);

/* Spaces. */
URY_API ury_status ury_space_parse(const char* document, ury_space** out);
URY_API void ury_space_free(ury_space* space);
URY_API ury_status ury_space_write(const ury_space* space, char** out);
URY_API size_t ury_space_size(const ury_space* space);
URY_API const char* ury_space_label(const ury_space* space, size_t i);
URY_API ury_status ury_space_roles(const ury_space* space, ury_roles* out);
URY_API ury_status ury_space_distance(const ury_space* space, const char* a,
                                      const char* b, char** out);

/* Triangle validation of a total document that need not be a metric.
 * violation: ["x","y","z"] with d(x,z) > d(x,y) + d(y,z), or NULL. */
URY_API ury_status ury_table_check(const char* document, int* valid,
                                   char** violation);

/* Partial semimetrics. */
URY_API ury_status ury_partial_parse(const char* document, ury_partial** out);
URY_API void ury_partial_free(ury_partial* p);
URY_API ury_status ury_partial_write(const ury_partial* p, char** out);
URY_API ury_status ury_complete(const ury_partial* p, ury_space** out);
/* witness: the violating f-sequence as a label array, or NULL. */
URY_API ury_status ury_consistent(const ury_partial* p, int* consistent,
                                  char** witness);

/* Independence. */
URY_API ury_status ury_d_max(const ury_space* space, const char* b1,
                             const char* b2, const char* const* C,
                             size_t C_len, char** out);
URY_API ury_status ury_d_min(const ury_space* space, const char* b1,
                             const char* b2, const char* const* C,
                             size_t C_len, char** out);
URY_API ury_status ury_gamma_interval(const ury_space* space, const char* b1,
                                      const char* b2, const char* const* C,
                                      size_t C_len, char** lo, char** hi);
URY_API ury_status ury_divides_pair(const ury_space* space, const char* a,
                                    const char* b1, const char* b2,
                                    const char* const* C, size_t C_len,
                                    int* divides);
/* certificate: {"pair","equation","lhs","rhs"}, or NULL when independent. */
URY_API ury_status ury_independent(const ury_space* space,
                                   const char* const* A, size_t A_len,
                                   const char* const* B, size_t B_len,
                                   const char* const* C, size_t C_len,
                                   int* independent, char** certificate);

/* Extension. */
URY_API ury_status ury_extension_bounds(const ury_space* space,
                                        const ury_problem* prob,
                                        const char* a, char** lower,
                                        char** upper);
URY_API ury_status ury_admissible_gammas(const ury_space* space,
                                         const ury_problem* prob,
                                         const char* a, char** lo, char** hi);
URY_API ury_status ury_extend_one(const ury_space* space,
                                  const ury_problem* prob, const char* a,
                                  const char* gamma, ury_space** out);
/* gammas: [{"point","copy","gamma"}, ...] in the order of A. */
URY_API ury_status ury_extend_all(const ury_space* space,
                                  const ury_problem* prob, ury_space** out,
                                  char** gammas);

/* Templates and cyclicity. Template indices in JSON results are 1-based. */
URY_API ury_status ury_template_parse(const char* document, ury_template** out);
URY_API void ury_template_free(ury_template* t);
URY_API ury_status ury_template_write(const ury_template* t, char** out);
URY_API ury_status ury_template_validate(const ury_template* t, int* valid,
                                         char** reason);
URY_API ury_status ury_is_n_cyclic(const ury_template* t, size_t n,
                                   int* cyclic, char** violating_cycle);
URY_API ury_status ury_sopn_witness(size_t n, ury_template** out);
URY_API ury_status ury_tp2_array(size_t rows, size_t cols, ury_space** out);

/* Stationarity. */
URY_API ury_status ury_is_stationary(const ury_space* space,
                                     const char* const* a, size_t a_len,
                                     const char* const* C, size_t C_len,
                                     int* stationary);
URY_API ury_status ury_unique_extension_to(const ury_space* space,
                                           const char* const* a, size_t a_len,
                                           const char* const* C, size_t C_len,
                                           const char* const* B, size_t B_len,
                                           int* unique);

/* Oracles. Grid results are JSON arrays of rational strings. */
URY_API ury_status ury_divides_oracle(const ury_space* space, const char* a,
                                      const char* b1, const char* b2,
                                      const char* const* C, size_t C_len,
                                      int* divides);
URY_API ury_status ury_interval_oracle(const ury_space* space,
                                       const char* b1, const char* b2,
                                       const char* const* C, size_t C_len,
                                       int64_t q, char** grid);
URY_API ury_status ury_extension_oracle(const ury_space* space,
                                        const ury_problem* prob,
                                        const char* a, int64_t q,
                                        char** grid);

#ifdef __cplusplus
}
#endif

#endif /* URYSOHN_URYSOHN_H */
