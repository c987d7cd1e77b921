// Copyright 2026 The orthodice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORTHODICE_ORTHODICE_H_
#define ORTHODICE_ORTHODICE_H_

/* C interface to liborthodice.
 *
 * Integers and rationals cross the boundary as strings ("123", "2^89-1",
 * "3/7", "0.25") so nothing is limited to 64 bits. Every operation fills an
 * opaque od_result holding a UTF-8 JSON document:
 *
 *   - exact rationals are {"rational": "p/q", "decimal": x};
 *   - integers are JSON numbers when they fit in 64 bits, decimal strings
 *     otherwise, and {"digits": d, "tail": "..."} summaries beyond
 *     od_options_set_full_integers' limit;
 *   - tabular data sits under "tables": {name: {"columns": [...],
 *     "rows": [[...], ...]}} with "default_table" naming the main one.
 *
 * On failure the status is non-zero, *out is left NULL and
 * od_last_error_message() describes the problem (thread-local).
 * A NULL od_options pointer means defaults everywhere. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ORTHODICE_API __declspec(dllexport)
#else
#define ORTHODICE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum od_status {
  OD_OK = 0,
  OD_INDEX_NOT_IN_I = 1,
  OD_INVALID_SIDE_COUNT = 2,
  OD_INVALID_SUPPORT = 3,
  OD_DOMAIN_TOO_SMALL = 4,
  OD_SUPPORT_TOO_LARGE = 5,
  OD_DEGENERATE_MOMENT_MATRIX = 6,
  OD_INVALID_PARTITION = 7,
  OD_TIME_OUT_OF_RANGE = 8,
  OD_SINGULAR_EVALUATION_POINT = 9,
  OD_INVALID_ARGUMENT = 10,
  OD_INTERNAL = 99
} od_status;

typedef struct od_options od_options;
typedef struct od_result od_result;

ORTHODICE_API const char* od_version(void);
/* "IndexNotInI", "InvalidArgument", ... ; "OK" for OD_OK. */
ORTHODICE_API const char* od_status_name(od_status status);
ORTHODICE_API const char* od_last_error_message(void);

ORTHODICE_API od_status od_options_create(od_options** out);
ORTHODICE_API void od_options_destroy(od_options* options);
/* Worker threads for Monte Carlo replicates; output never depends on it. */
ORTHODICE_API od_status od_options_set_threads(od_options* o, unsigned threads);
ORTHODICE_API od_status od_options_set_tail_tol(od_options* o, double tol);
ORTHODICE_API od_status od_options_set_grid_size(od_options* o, size_t size);
ORTHODICE_API od_status od_options_set_support_cap(od_options* o, int64_t cap);
/* GOE conditional-moment samples; 0 selects quadrature. */
ORTHODICE_API od_status od_options_set_samples(od_options* o, uint64_t samples);
/* Integers with more digits than this are summarized (default 1000);
 * 0 disables summaries. */
ORTHODICE_API od_status od_options_set_full_integers(od_options* o,
                                                     uint64_t max_digits);

ORTHODICE_API const char* od_result_json(const od_result* result);
ORTHODICE_API size_t od_result_warning_count(const od_result* result);
ORTHODICE_API const char* od_result_warning(const od_result* result, size_t i);
ORTHODICE_API void od_result_destroy(od_result* result);

/* Orthogonal dice. */
ORTHODICE_API od_status od_dice_list(const od_options* o, uint64_t count,
                                     od_result** out);
ORTHODICE_API od_status od_dice_from_index(const od_options* o, const char* k,
                                           od_result** out);
ORTHODICE_API od_status od_dice_from_prime(const od_options* o, const char* p,
                                           int check_primality,
                                           od_result** out);
ORTHODICE_API od_status od_dice_classify(const od_options* o, const char* m,
                                         const char* n, od_result** out);
ORTHODICE_API od_status od_dice_nearest(const od_options* o,
                                        const char* c_star, od_result** out);
ORTHODICE_API od_status od_dice_first_at_least(const od_options* o,
                                               const char* c_min,
                                               od_result** out);
ORTHODICE_API od_status od_dice_decompose(const od_options* o, const char* k,
                                          od_result** out);
ORTHODICE_API od_status od_count_coprime23(const od_options* o, const char* n,
                                           int use_oracle, od_result** out);
ORTHODICE_API od_status od_count_coprime23_u64(uint64_t n, int use_oracle,
                                               uint64_t* count);

/* Count laws. */
ORTHODICE_API od_status od_pgf_eval(const char* m, const char* n, double t,
                                    double* value);
ORTHODICE_API od_status od_law_pmf(const od_options* o, const char* m,
                                   const char* n, const char* a,
                                   od_result** out);
ORTHODICE_API od_status od_law_moments(const od_options* o, const char* m,
                                       const char* n, const char* a,
                                       unsigned max_order, od_result** out);
ORTHODICE_API od_status od_law_converge(const od_options* o, const char* k0,
                                        const char* const* indices,
                                        size_t n_indices, od_result** out);

/* Stone throwing Monte Carlo over the model/functional registry. */
ORTHODICE_API od_status od_sim_estimate(const od_options* o, const char* model,
                                        const char* const* functionals,
                                        size_t n_functionals,
                                        uint64_t replicates, uint64_t seed,
                                        od_result** out);

/* Applications. */
ORTHODICE_API od_status od_cards_table(const od_options* o, const char* m,
                                       const char* n, od_result** out);
ORTHODICE_API od_status od_cards_partition(const od_options* o, unsigned hand,
                                           const unsigned* counts,
                                           size_t n_counts, od_result** out);
ORTHODICE_API od_status od_cards_game(const od_options* o, const char* m,
                                      const char* n, uint64_t rounds,
                                      uint64_t seed, od_result** out);

/* r_grid == NULL selects the default grid -3, -2.75, ..., 3. */
ORTHODICE_API od_status od_goe_summary(const od_options* o,
                                       const double* r_grid, size_t n_r,
                                       uint64_t seed, od_result** out);
ORTHODICE_API od_status od_goe_wigner(const od_options* o, uint64_t n,
                                      uint64_t seed, od_result** out);

ORTHODICE_API od_status od_shotnoise(const od_options* o, double horizon,
                                     double amplitude, double decay,
                                     const char* die_index,
                                     size_t grid_points, uint64_t replicates,
                                     uint64_t seed, od_result** out);

typedef enum od_density_kind {
  OD_DENSITY_GAUSSIAN = 0,
  OD_DENSITY_BALL = 1,
  OD_DENSITY_DISK = 2
} od_density_kind;

typedef struct od_gravity_params {
  od_density_kind density;
  double center[3];      /* gaussian, ball */
  double scale;          /* sigma | radius | disk scale length */
  double scale_height;   /* disk */
  double r_max;          /* disk */
  double z_max;          /* disk */
  double mass_mean;
  double mass_variance;
  double gravitational_constant;
  int soften_inside;
  double softening;      /* <= 0: default 1e-3 of the support diameter */
  double z[3];
  double w[3];
} od_gravity_params;

/* Fills *params with the defaults (unit Gaussian at the origin, b_m = 4,
 * d_m^2 = 4, G = 1, z = (3,0,0), w = (0,3,0)). */
ORTHODICE_API void od_gravity_params_init(od_gravity_params* params);
ORTHODICE_API od_status od_gravity(const od_options* o,
                                   const od_gravity_params* params,
                                   const char* m, const char* n,
                                   uint64_t replicates, uint64_t seed,
                                   od_result** out);
ORTHODICE_API od_status od_gravity_milky_way(const od_options* o,
                                             uint64_t replicates,
                                             uint64_t seed, od_result** out);

/* Orthogonal polynomials. */
ORTHODICE_API od_status od_poly_report(const od_options* o, const char* k0,
                                       const char* const* indices,
                                       size_t n_indices, unsigned degree,
                                       const unsigned* powers,
                                       size_t n_powers, od_result** out);

#ifdef __cplusplus
}
#endif

#endif  /* ORTHODICE_ORTHODICE_H_ */
