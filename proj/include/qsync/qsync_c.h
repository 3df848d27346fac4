// Copyright 2026 The qsync Authors
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

/* C interface to the qsync library. Every call returns a qsync_error; on failure the
 * thread-local message from qsync_last_error_message() describes the cause. Strings handed
 * out through char** parameters are owned by the caller and released with qsync_string_free. */

#ifndef QSYNC_C_H
#define QSYNC_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QSYNC_API __declspec(dllexport)
#else
#define QSYNC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qsync_code qsync_code;

typedef enum {
    QSYNC_OK = 0,
    QSYNC_ERR_INVALID_ARGUMENT = 1,
    QSYNC_ERR_PRECONDITION = 2,
    QSYNC_ERR_BUDGET = 3,
    QSYNC_ERR_IO = 4,
    QSYNC_ERR_INTERNAL = 5
} qsync_error;

typedef enum {
    QSYNC_STATUS_SUCCESS = 0,
    QSYNC_STATUS_DEGENERATE_SUCCESS = 1,
    QSYNC_STATUS_BIT_FAILURE = 2,
    QSYNC_STATUS_SYNC_FAILURE = 3,
    QSYNC_STATUS_PHASE_FAILURE = 4
} qsync_status;

QSYNC_API const char *qsync_version(void);
QSYNC_API const char *qsync_rng_algorithm(void);
QSYNC_API const char *qsync_last_error_message(void);
/* Name of a qsync_status value, or "unknown" outside the enum. */
QSYNC_API const char *qsync_status_name(int status);
QSYNC_API void qsync_string_free(char *s);

/* Primitive narrow-sense BCH pair of length 2^m - 1 with designed distances d1 (for C) and d2 (for D). */
QSYNC_API qsync_error qsync_code_from_bch(unsigned m, unsigned d1, unsigned d2, int64_t a_l, int64_t a_r, qsync_code **out);
/* Generators as "x^3+x+1" or little-endian hex with a 0x prefix. */
QSYNC_API qsync_error qsync_code_from_generators(size_t n, const char *g_c, const char *g_d, int64_t a_l, int64_t a_r,
                                                 qsync_code **out);
QSYNC_API qsync_error qsync_code_from_descriptor(const char *json, qsync_code **out);
QSYNC_API qsync_error qsync_code_load(const char *path, qsync_code **out);
QSYNC_API qsync_error qsync_code_save(const qsync_code *code, const char *path);
QSYNC_API void qsync_code_free(qsync_code *code);

typedef struct {
    size_t n;
    size_t k1;
    size_t k2;
    size_t d1;
    size_t d2;
    int d1_computed;
    int d2_computed;
    size_t a_l;
    size_t a_r;
    size_t n_ext;
    size_t k_logical;
    size_t phase_radius;
    size_t bit_radius;
    size_t sync_table_size;
} qsync_code_info;

QSYNC_API qsync_error qsync_code_get_info(const qsync_code *code, qsync_code_info *out);
QSYNC_API qsync_error qsync_code_descriptor(const qsync_code *code, char **json_out);
/* Hex FNV-1a digest of the canonical descriptor. */
QSYNC_API qsync_error qsync_code_hash(const qsync_code *code, char **hex_out);
/* Entry i of the sync table, i in [0, sync_table_size): slip and remainder in monomial form. */
QSYNC_API qsync_error qsync_code_sync_entry(const qsync_code *code, size_t index, int64_t *slip_out, char **remainder_out);
/* Generators of C and D and the sync modulus f, in monomial form. Any output may be NULL. */
QSYNC_API qsync_error qsync_code_polynomials(const qsync_code *code, char **g_c, char **g_d, char **f);

typedef struct {
    int status;
    int has_slip_estimate;
    int64_t slip_estimate;
    size_t bit_correction_weight;
    size_t phase_correction_weight;
    /* |<ideal|final>| from the state-vector oracle, or -1 when not requested. */
    double fidelity;
} qsync_trial_result;

/* One pipeline run with explicit error positions on the n_ext qubits of the block. */
QSYNC_API qsync_error qsync_run_trial(const qsync_code *code, uint64_t logical_index, int64_t slip, const size_t *bit_positions,
                                      size_t num_bit_positions, const size_t *phase_positions, size_t num_phase_positions,
                                      uint64_t branch_seed, int with_oracle, qsync_trial_result *out);

enum { QSYNC_NOISE_IID = 0, QSYNC_NOISE_FIXED_WEIGHT = 1 };
enum { QSYNC_SLIP_UNIFORM = 0, QSYNC_SLIP_FIXED = 1, QSYNC_SLIP_RANGE = 2 };

typedef struct {
    uint64_t trials;
    uint64_t seed;
    int noise;
    double p_bit;
    double p_phase;
    size_t bit_weight;
    size_t phase_weight;
    int clamped;
    int slip_policy;
    int64_t slip_lo;
    int64_t slip_hi;
    size_t threads;
} qsync_sim_config;

QSYNC_API void qsync_sim_config_default(qsync_sim_config *config);
/* csv_out and summary_out may be NULL. */
QSYNC_API qsync_error qsync_simulate(const qsync_code *code, const qsync_sim_config *config, char **csv_out, char **summary_out,
                                     double *success_rate_out);

typedef struct {
    size_t min_bit_weight;
    size_t max_bit_weight;
    size_t min_phase_weight;
    size_t max_phase_weight;
    int has_slip_range;
    int64_t slip_lo;
    int64_t slip_hi;
    size_t max_branch_bits;
    size_t sampled_branches;
    uint64_t seed;
    double budget;
    size_t threads;
} qsync_sweep_config;

QSYNC_API void qsync_sweep_config_default(qsync_sweep_config *config);
QSYNC_API qsync_error qsync_exhaustive(const qsync_code *code, const qsync_sweep_config *config, char **report_out,
                                       uint64_t *violations_out, double *non_success_fraction_out);
QSYNC_API qsync_error qsync_oracle(const qsync_code *code, const qsync_sweep_config *config, int negative_controls,
                                   char **report_out, int *agrees_out, double *max_success_deviation_out);

#ifdef __cplusplus
}
#endif

#endif
