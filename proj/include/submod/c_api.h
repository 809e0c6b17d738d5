// Copyright 2026 The Authors.
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

/* C interface to the submod library.
 *
 * All objects are opaque handles created by a *_create / *_load / solver
 * call and released with the matching *_destroy. Every fallible call returns
 * a submod_status_t; on failure the message is available from
 * submod_last_error() until the next failing call on the same thread.
 * Output parameters are written only on success.
 */

#ifndef SUBMOD_C_API_H_
#define SUBMOD_C_API_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SUBMOD_API __declspec(dllexport)
#else
#define SUBMOD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SUBMOD_OK = 0,
  SUBMOD_ERR_ARGUMENT = 1,   /* null handle/pointer, bad enum, short buffer */
  SUBMOD_ERR_DOMAIN = 2,     /* index out of range, k > n, bad epsilon, ... */
  SUBMOD_ERR_PARSE = 3,      /* malformed instance file */
  SUBMOD_ERR_CAPABILITY = 4, /* enumeration limit exceeded */
  SUBMOD_ERR_INTERNAL = 5
} submod_status_t;

typedef enum {
  SUBMOD_KIND_FACILITY = 0,
  SUBMOD_KIND_MODULAR = 1,
  SUBMOD_KIND_SQUARED = 2,
  SUBMOD_KIND_INFER = 3 /* from the file extension */
} submod_kind_t;

typedef enum {
  SUBMOD_ALGO_GREEDY = 0,
  SUBMOD_ALGO_LAZY = 1,
  SUBMOD_ALGO_STOCHASTIC = 2
} submod_algorithm_t;

typedef enum {
  SUBMOD_PROP_MONOTONE = 0,
  SUBMOD_PROP_SUBMODULAR_DERIVATIVE = 1,
  SUBMOD_PROP_SUBMODULAR_INTERSECTION = 2
} submod_property_t;

typedef enum { SUBMOD_MODE_EXHAUSTIVE = 0, SUBMOD_MODE_SAMPLED = 1 } submod_mode_t;

typedef struct submod_function* submod_function_t;
typedef struct submod_result* submod_result_t;
typedef struct submod_report* submod_report_t;
typedef struct submod_oracle* submod_oracle_t;

typedef struct {
  submod_kind_t kind;
  size_t rows; /* 1 for weight instances */
  size_t cols; /* ground set size n */
  uint64_t checksum;
} submod_instance_info_t;

typedef struct {
  submod_algorithm_t algorithm;
  size_t k;
  /* Stochastic only: set exactly one of epsilon (in (0,1)) or sample_size
   * (>= 1); leave the other at 0. */
  double epsilon;
  size_t sample_size;
  uint64_t seed;
  uint64_t stream;
} submod_solve_options_t;

typedef struct {
  size_t step; /* 1-based */
  size_t element;
  double gain;
  double objective;
} submod_step_t;

SUBMOD_API const char* submod_last_error(void);
SUBMOD_API const char* submod_status_string(submod_status_t status);

/* Instances. */
SUBMOD_API submod_status_t submod_function_load(const char* path,
                                                submod_kind_t kind,
                                                int has_header,
                                                submod_function_t* out);
SUBMOD_API submod_status_t submod_facility_create(const double* entries,
                                                  size_t rows, size_t cols,
                                                  submod_function_t* out);
SUBMOD_API submod_status_t submod_weights_create(submod_kind_t kind,
                                                 const double* weights,
                                                 size_t n,
                                                 submod_function_t* out);
SUBMOD_API void submod_function_destroy(submod_function_t f);

SUBMOD_API submod_status_t submod_function_info(submod_function_t f,
                                                submod_instance_info_t* out);
/* *has_labels is 1 when the ground set carries labels; otherwise *out is
 * the decimal index. *out stays valid for the life of f. */
SUBMOD_API submod_status_t submod_function_label(submod_function_t f,
                                                 size_t element,
                                                 const char** out,
                                                 int* has_labels);

SUBMOD_API submod_status_t submod_evaluate(submod_function_t f,
                                           const size_t* members, size_t count,
                                           double* value);
SUBMOD_API submod_status_t submod_marginal_gain(submod_function_t f,
                                                const size_t* members,
                                                size_t count, size_t element,
                                                double* gain);

/* Solvers. */
SUBMOD_API submod_status_t submod_sample_size(size_t n, size_t k,
                                              double epsilon, size_t* out);
SUBMOD_API submod_status_t submod_solve(submod_function_t f,
                                        const submod_solve_options_t* options,
                                        submod_result_t* out);
SUBMOD_API void submod_result_destroy(submod_result_t r);
SUBMOD_API size_t submod_result_k(submod_result_t r);
SUBMOD_API double submod_result_objective(submod_result_t r);
SUBMOD_API uint64_t submod_result_evaluations(submod_result_t r);
/* 0 for non-stochastic results. */
SUBMOD_API size_t submod_result_sample_size(submod_result_t r);
SUBMOD_API submod_status_t submod_result_step(submod_result_t r, size_t index,
                                              submod_step_t* out);

/* Oracle. Rejects C(n,k) > cap (0 selects the default cap of 10^7). */
SUBMOD_API submod_status_t submod_oracle_run(submod_function_t f, size_t k,
                                             uint64_t cap,
                                             submod_oracle_t* out);
SUBMOD_API void submod_oracle_destroy(submod_oracle_t o);
SUBMOD_API double submod_oracle_value(submod_oracle_t o);
SUBMOD_API uint64_t submod_oracle_sets_evaluated(submod_oracle_t o);
/* Writes the k members of the best set in ascending order. */
SUBMOD_API submod_status_t submod_oracle_best_set(submod_oracle_t o,
                                                  size_t* members,
                                                  size_t capacity);

/* Gap diagnostic for a solve against an oracle for the same k.
 * deltas needs k + 1 slots; ratios and ratio_defined need k slots. */
SUBMOD_API submod_status_t submod_gap_diagnostic(
    submod_result_t r, submod_oracle_t o, double* deltas, double* ratios,
    int* ratio_defined, int* contraction_holds);

/* Property checks. */
SUBMOD_API submod_status_t submod_check(submod_function_t f,
                                        submod_property_t property,
                                        submod_mode_t mode, uint64_t budget,
                                        uint64_t seed, submod_report_t* out);
SUBMOD_API void submod_report_destroy(submod_report_t rep);
SUBMOD_API int submod_report_holds(submod_report_t rep);
SUBMOD_API uint64_t submod_report_pairs_checked(submod_report_t rep);
SUBMOD_API int submod_report_has_witness(submod_report_t rep);

typedef struct {
  size_t a_size;
  int has_b;
  size_t b_size;
  int has_element;
  size_t element;
  double lhs;
  double rhs;
  double magnitude;
} submod_witness_info_t;

SUBMOD_API submod_status_t submod_report_witness(submod_report_t rep,
                                                 submod_witness_info_t* out);
/* Members of witness set A (which = 0) or B (which = 1), ascending. */
SUBMOD_API submod_status_t submod_report_witness_set(submod_report_t rep,
                                                     int which,
                                                     size_t* members,
                                                     size_t capacity);
/* 1 if re-evaluating the witness on f reproduces the violation. */
SUBMOD_API submod_status_t submod_report_reproduces(submod_report_t rep,
                                                    submod_function_t f,
                                                    int* reproduces);

/* |f(A u H) - f(A) - sum of stepwise gains| and its value scale. */
SUBMOD_API submod_status_t submod_telescoping_residual(
    submod_function_t f, const size_t* base, size_t base_count,
    const size_t* sequence, size_t sequence_count, double* residual,
    double* scale);

#ifdef __cplusplus
}
#endif

#endif /* SUBMOD_C_API_H_ */
