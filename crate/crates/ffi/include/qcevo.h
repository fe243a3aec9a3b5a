/*
 * Copyright 2026 The qcevo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QCEVO_H
#define QCEVO_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum QcevoStatus {
  QCEVO_STATUS_OK = 0,
  QCEVO_STATUS_NULL_POINTER = 1,
  QCEVO_STATUS_INVALID_UTF8 = 2,
  QCEVO_STATUS_CONFIG = 3,
  QCEVO_STATUS_INVARIANT = 4,
  QCEVO_STATUS_DIMENSION_MISMATCH = 5,
  QCEVO_STATUS_PARAM_MISMATCH = 6,
  QCEVO_STATUS_IO = 7,
  QCEVO_STATUS_JSON = 8,
  QCEVO_STATUS_TOML = 9,
  QCEVO_STATUS_OUT_OF_RANGE = 10,
  QCEVO_STATUS_PANIC = 11,
} QcevoStatus;

/**
 * A validated circuit genome.
 */
typedef struct QcevoCircuit QcevoCircuit;

/**
 * The records and best individual of one evolutionary run.
 */
typedef struct QcevoRun QcevoRun;

/**
 * A normalized statevector.
 */
typedef struct QcevoState QcevoState;

/**
 * One row of per-generation metrics.
 */
typedef struct QcevoRecord {
  size_t generation;
  double best_fitness;
  double mean_fitness;
  double best_fidelity;
  size_t best_depth;
  double depth_reduction_pct;
} QcevoRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null if none failed.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *qcevo_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qcevo_string_free(char *s);

/**
 * Parses and validates a circuit from its JSON form.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum QcevoStatus qcevo_circuit_from_json(const char *json, struct QcevoCircuit **out);

/**
 * Serializes a circuit to JSON.
 *
 * # Safety
 * `circuit` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_circuit_to_json(const struct QcevoCircuit *circuit, char **out);

/**
 * Renders a circuit as OpenQASM 2.0.
 *
 * # Safety
 * `circuit` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_circuit_to_qasm(const struct QcevoCircuit *circuit, char **out);

/**
 * Draws a compact random target circuit with exactly `depth` columns.
 *
 * # Safety
 * `out` must be writable.
 */
enum QcevoStatus qcevo_generate_target(size_t num_qubits,
                                       size_t depth,
                                       uint64_t seed,
                                       struct QcevoCircuit **out);

/**
 * # Safety
 * `circuit` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_circuit_num_qubits(const struct QcevoCircuit *circuit, size_t *out);

/**
 * Column count of the circuit.
 *
 * # Safety
 * `circuit` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_circuit_depth(const struct QcevoCircuit *circuit, size_t *out);

/**
 * Returns a compacted copy; the input is unchanged.
 *
 * # Safety
 * `circuit` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_circuit_compact(const struct QcevoCircuit *circuit,
                                       struct QcevoCircuit **out);

/**
 * # Safety
 * `circuit` must be null or a live handle; it is invalid afterwards.
 */
void qcevo_circuit_free(struct QcevoCircuit *circuit);

/**
 * Simulates the circuit from `|0…0⟩`.
 *
 * # Safety
 * `circuit` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_simulate(const struct QcevoCircuit *circuit, struct QcevoState **out);

/**
 * Number of amplitudes, `2^n`.
 *
 * # Safety
 * `state` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_state_len(const struct QcevoState *state, size_t *out);

/**
 * Copies amplitudes as interleaved `re, im` pairs into `buf`, which must
 * hold `2 * len` doubles where `len` equals [`qcevo_state_len`].
 * Amplitude index bit `n - 1 - q` belongs to qubit `q`.
 *
 * # Safety
 * `state` must be a live handle; `buf` must point to `2 * len` doubles.
 */
enum QcevoStatus qcevo_state_amplitudes(const struct QcevoState *state, double *buf, size_t len);

/**
 * # Safety
 * `state` must be null or a live handle; it is invalid afterwards.
 */
void qcevo_state_free(struct QcevoState *state);

/**
 * Pure-state fidelity `|⟨a|b⟩|`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum QcevoStatus qcevo_fidelity(const struct QcevoState *a,
                                const struct QcevoState *b,
                                double *out);

/**
 * `alpha * fidelity - beta * (depth - 1) / (target_depth - 1)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QcevoStatus qcevo_fitness(double fidelity,
                               size_t depth,
                               size_t target_depth,
                               double alpha,
                               double beta,
                               double *out);

/**
 * Runs one seeded evolutionary search against `target`. `config_toml` may
 * be null for the default configuration; otherwise it uses the same keys as
 * the command-line config file.
 *
 * # Safety
 * `target` must be a live handle; `config_toml` null or nul-terminated;
 * `out` writable.
 */
enum QcevoStatus qcevo_evolve(const struct QcevoCircuit *target,
                              const char *config_toml,
                              uint64_t seed,
                              struct QcevoRun **out);

/**
 * Number of records, `generations + 1`.
 *
 * # Safety
 * `run` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_run_record_count(const struct QcevoRun *run, size_t *out);

/**
 * # Safety
 * `run` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_run_record(const struct QcevoRun *run,
                                  size_t index,
                                  struct QcevoRecord *out);

/**
 * Copy of the fittest circuit of the final population.
 *
 * # Safety
 * `run` must be a live handle; `out` must be writable.
 */
enum QcevoStatus qcevo_run_best(const struct QcevoRun *run, struct QcevoCircuit **out);

/**
 * # Safety
 * `run` must be null or a live handle; it is invalid afterwards.
 */
void qcevo_run_free(struct QcevoRun *run);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCEVO_H */
