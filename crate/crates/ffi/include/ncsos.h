#ifndef NCSOS_H
#define NCSOS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NcsMode {
  NCS_MODE_EIGEN = 0,
  NCS_MODE_TRACE = 1,
} NcsMode;

typedef enum NcsSparsity {
  NCS_SPARSITY_DENSE = 0,
  NCS_SPARSITY_TS = 1,
  NCS_SPARSITY_CS = 2,
  NCS_SPARSITY_CS_TS = 3,
} NcsSparsity;

typedef enum NcsExtension {
  NCS_EXTENSION_MAXIMAL = 0,
  NCS_EXTENSION_MIN_FILL = 1,
  NCS_EXTENSION_MIN_DEGREE = 2,
} NcsExtension;

typedef enum NcsErrorCode {
  NCS_ERROR_CODE_OK = 0,
  NCS_ERROR_CODE_NULL_POINTER = 1,
  NCS_ERROR_CODE_INVALID_UTF8 = 2,
  NCS_ERROR_CODE_PARSE = 3,
  NCS_ERROR_CODE_INVALID_ARGUMENT = 4,
  NCS_ERROR_CODE_RELAXATION = 5,
  NCS_ERROR_CODE_SOLVER = 6,
  NCS_ERROR_CODE_IO = 7,
  NCS_ERROR_CODE_PANIC = 8,
} NcsErrorCode;

typedef enum NcsSolveStatus {
  NCS_SOLVE_STATUS_OPTIMAL = 0,
  NCS_SOLVE_STATUS_MAX_ITERATIONS = 1,
  NCS_SOLVE_STATUS_UNBOUNDED_SUSPECTED = 2,
  NCS_SOLVE_STATUS_INFEASIBLE_SUSPECTED = 3,
} NcsSolveStatus;

/**
 * Opaque problem handle.
 */
typedef struct NcsProblem NcsProblem;

/**
 * Relaxation and solver options. Obtain defaults from [`ncs_options_default`].
 */
typedef struct NcsOptions {
  enum NcsMode mode;
  enum NcsSparsity sparsity;
  /**
   * Relaxation order; 0 selects the smallest admissible one.
   */
  size_t order;
  /**
   * Sparse order; 0 iterates until the graphs stabilize.
   */
  size_t ts_order;
  enum NcsExtension extension;
  enum NcsExtension csp_extension;
  double tol;
  size_t max_iter;
} NcsOptions;

typedef struct NcsReport {
  size_t n;
  size_t dhat;
  size_t k;
  /**
   * Largest block side length.
   */
  size_t mb;
  size_t num_blocks;
  size_t num_moments;
  /**
   * Lower bound (primal objective).
   */
  double opt;
  double dual;
  enum NcsSolveStatus status;
  size_t iterations;
  double t_assemble;
  double t_solve;
  double certificate_residual;
} NcsReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default options: eigenvalue mode, dense, smallest order, sparse order 1,
 * min-fill extensions, tolerance 1e-6, 200000 iterations.
 */
struct NcsOptions ncs_options_default(void);

/**
 * Creates an unconstrained problem from the text of its objective.
 *
 * # Safety
 * `objective` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NcsErrorCode ncs_problem_new(const char *objective, struct NcsProblem **out);

/**
 * Creates a problem from the problem-file format (`[objective]` and
 * `[constraints]` sections).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NcsErrorCode ncs_problem_parse(const char *text, struct NcsProblem **out);

/**
 * Creates a benchmark problem, optionally with the box constraints.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NcsErrorCode ncs_problem_benchmark(const char *name,
                                        size_t n,
                                        bool boxed,
                                        struct NcsProblem **out);

/**
 * Appends the constraint `g >= 0`.
 *
 * # Safety
 * `problem` must be a live handle and `g` a NUL-terminated string.
 */
enum NcsErrorCode ncs_problem_add_constraint(struct NcsProblem *problem, const char *g);

/**
 * Number of variables, or 0 for a null handle.
 *
 * # Safety
 * `problem` must be null or a live handle.
 */
size_t ncs_problem_num_vars(const struct NcsProblem *problem);

/**
 * Number of constraints, or 0 for a null handle.
 *
 * # Safety
 * `problem` must be null or a live handle.
 */
size_t ncs_problem_num_constraints(const struct NcsProblem *problem);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `problem` must be null or a handle not freed before.
 */
void ncs_problem_free(struct NcsProblem *problem);

/**
 * Builds and solves the relaxation. `options` may be null for defaults.
 *
 * # Safety
 * `problem` must be a live handle and `report` a valid pointer.
 */
enum NcsErrorCode ncs_solve(const struct NcsProblem *problem,
                            const struct NcsOptions *options,
                            struct NcsReport *report);

/**
 * Builds the relaxation and writes it to `path` in SDPA sparse format.
 *
 * # Safety
 * `problem` must be a live handle and `path` a NUL-terminated string.
 */
enum NcsErrorCode ncs_export_sdpa(const struct NcsProblem *problem,
                                  const struct NcsOptions *options,
                                  const char *path);

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ncs_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ncs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCSOS_H */
