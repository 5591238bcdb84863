// Copyright 2026 The Orbitale Authors
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

/* C interface to the orbitale library.
 *
 * Every call returns an orb_status (0 on success).  Strings returned
 * through `char** out` are JSON documents owned by the caller and released
 * with orb_string_free.  After a failure, orb_last_error() describes it
 * for the calling thread.
 */

#ifndef ORBITALE_ORBITALE_H_
#define ORBITALE_ORBITALE_H_

#include <stdint.h>

#if defined(_WIN32)
#define ORB_API __declspec(dllexport)
#else
#define ORB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orb_status {
  ORB_OK = 0,
  ORB_INVALID_ARGUMENT = 1,
  ORB_PARSE = 2,
  ORB_PRECISION_EXHAUSTED = 3,
  ORB_NOT_PRE_REGULAR = 4,
  ORB_NOT_REGULAR = 5,
  ORB_LINEAR_SOLVE_SINGULAR = 6,
  ORB_DEGENERATE = 7,
  ORB_NOT_THETA_STABLE = 8,
  ORB_DEGENERATE_GRAM = 9,
  ORB_DESCENT_FAILS = 10,
  ORB_CAP_EXCEEDED = 11,
  ORB_BOUND_UNSTABLE = 12,
  ORB_SAMPLING_EXHAUSTED = 13,
  ORB_INTERNAL = 14
} orb_status;

typedef enum orb_side { ORB_SIDE_FJ = 0, ORB_SIDE_BESSEL = 1 } orb_side;

/* Residue field F_q (q an odd prime <= 13) and working precision. */
typedef struct orb_context orb_context;
/* A symmetric-space orbit datum bound to a context. */
typedef struct orb_datum orb_datum;

ORB_API const char* orb_status_name(orb_status s);
ORB_API const char* orb_last_error(void);
ORB_API void orb_string_free(char* s);

ORB_API orb_status orb_context_new(uint32_t q, int precision, orb_context** out);
ORB_API void orb_context_free(orb_context* ctx);
ORB_API uint32_t orb_context_q(const orb_context* ctx);
ORB_API int orb_context_precision(const orb_context* ctx);

/* Datum JSON: {q, side, n, m, r, zeta: [[..]], x: [..], y: [..]}. */
ORB_API orb_status orb_datum_from_json(const orb_context* ctx, const char* json,
                                       orb_datum** out);
ORB_API orb_status orb_datum_to_json(const orb_datum* d, char** out);
ORB_API void orb_datum_free(orb_datum* d);

/* Instance `index` of the seeded sweep (side, n, val_delta_max, seed). */
ORB_API orb_status orb_sample(const orb_context* ctx, orb_side side, int n,
                              int val_delta_max, uint64_t seed, int index,
                              orb_datum** out);
ORB_API uint64_t orb_instance_seed(uint64_t seed, int index);

/* {t, a, b, delta, delta_val, T_val, parity, transfer, regular}. */
ORB_API orb_status orb_invariants(const orb_datum* d, char** out);
/* {beta, epsilon, unitary_datum, certificate_ok, invariants}. */
ORB_API orb_status orb_match(const orb_datum* d, char** out);

/* Input {q, a: [..], b: [..]}; output {d, M, alt_sum, N, identity_holds}. */
ORB_API orb_status orb_count_lattices(const orb_context* ctx, const char* json,
                                      uint64_t cap, char** out, int* holds);

/* Both orbital integrals, the matching, and (FJ) the lattice counts. */
ORB_API orb_status orb_verify_fl(const orb_datum* d, uint64_t module_cap, char** out,
                                 int* holds);

/* Coefficient differences zeta0 - L for `trials` random Satake sets. */
ORB_API orb_status orb_verify_whittaker(int n, int m, int order, int trials,
                                        uint64_t seed, char** out, int* holds);

#ifdef __cplusplus
}
#endif

#endif /* ORBITALE_ORBITALE_H_ */
