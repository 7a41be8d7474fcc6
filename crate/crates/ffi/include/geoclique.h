#ifndef GEOCLIQUE_H
#define GEOCLIQUE_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdint.h>
#include <stdbool.h>
#include <stddef.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum GcStatus {
  GC_STATUS_GC_OK = 0,
  /**
   * Malformed input (JSON, DIMACS, ranges).
   */
  GC_STATUS_GC_ERR_PARSE = 1,
  /**
   * Refused: budget caps or infeasible construction.
   */
  GC_STATUS_GC_ERR_REFUSED = 2,
  /**
   * A class assumption was violated in strict mode.
   */
  GC_STATUS_GC_ERR_ASSUMPTION = 3,
  /**
   * Null pointer or invalid argument.
   */
  GC_STATUS_GC_ERR_ARGUMENT = 4,
  GC_STATUS_GC_ERR_INTERNAL = 5,
} GcStatus;

/**
 * Opaque geometric instance handle.
 */
typedef struct GcInstance GcInstance;

/**
 * Opaque solution handle.
 */
typedef struct GcSolution GcSolution;

/**
 * Solver parameters as plain C data. `s_cap == 0` means "choose n/4".
 */
typedef struct GcParams {
  double epsilon;
  double beta;
  uint32_t vc_dim;
  uint32_t iocp;
  uint64_t seed;
  uintptr_t s_cap;
  uintptr_t t_cap;
  bool paper_faithful;
  bool strict;
} GcParams;

/**
 * Derived constants of the approximation analysis.
 */
typedef struct GcConstants {
  double c;
  double delta;
  uintptr_t s;
  uintptr_t t;
  uintptr_t z;
} GcConstants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent error on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *gc_last_error_message(void);

/**
 * Default solver parameters (ε = 0.2, practical mode, t cap 1000).
 */
struct GcParams gc_params_default(void);

/**
 * Compute the derived constants for the given parameters.
 *
 * # Safety
 * `params` and `out` must be valid, non-null pointers.
 */
enum GcStatus gc_compute_constants(const struct GcParams *params, struct GcConstants *out);

/**
 * Parse an instance document (see the file-format docs) into a handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum GcStatus gc_instance_parse_json(const char *text, struct GcInstance **out);

/**
 * # Safety
 * `inst` must be a handle from `gc_instance_parse_json`, not yet freed.
 */
void gc_instance_free(struct GcInstance *inst);

/**
 * Number of objects in the instance.
 *
 * # Safety
 * `inst` must be a live instance handle.
 */
uintptr_t gc_instance_len(const struct GcInstance *inst);

/**
 * Approximate Maximum Clique on a 2-d (disk) or 3-d (equal-radius ball)
 * instance. Validity is re-verified against the instance.
 *
 * # Safety
 * All pointers must be valid; `inst` must be a live instance handle.
 */
enum GcStatus gc_solve_clique(const struct GcInstance *inst,
                              const struct GcParams *params,
                              struct GcSolution **out);

/**
 * Exact Maximum Clique for a 2-d equal-radius instance (points with a
 * threshold, or balls with one radius).
 *
 * # Safety
 * All pointers must be valid; `inst` must be a live instance handle.
 */
enum GcStatus gc_solve_clique_exact_unit_disk(const struct GcInstance *inst,
                                              struct GcSolution **out);

/**
 * Approximate Maximum Independent Set on an explicit graph given as
 * `edge_count` pairs (u, v) in `edges_flat` (length 2·edge_count).
 *
 * # Safety
 * `edges_flat` must point to `2 * edge_count` readable values (may be null
 * when `edge_count` is 0); `params` and `out` must be valid pointers.
 */
enum GcStatus gc_solve_mis_graph(uintptr_t n,
                                 const uintptr_t *edges_flat,
                                 uintptr_t edge_count,
                                 const struct GcParams *params,
                                 struct GcSolution **out);

/**
 * # Safety
 * `sol` must be a solution handle from this library, not yet freed.
 */
void gc_solution_free(struct GcSolution *sol);

/**
 * Number of vertices in the solution.
 *
 * # Safety
 * `sol` must be a live solution handle.
 */
uintptr_t gc_solution_size(const struct GcSolution *sol);

/**
 * Total weight (equals size under unit weights).
 *
 * # Safety
 * `sol` must be a live solution handle.
 */
double gc_solution_weight(const struct GcSolution *sol);

/**
 * Whether the solution re-verified against its instance.
 *
 * # Safety
 * `sol` must be a live solution handle.
 */
bool gc_solution_valid(const struct GcSolution *sol);

/**
 * Copy up to `cap` solution vertices into `buf`; the full count lands in
 * `written` regardless, so call once with cap 0 to size the buffer.
 *
 * # Safety
 * `buf` must point to `cap` writable values (may be null when cap is 0);
 * `written` must be valid; `sol` must be a live solution handle.
 */
enum GcStatus gc_solution_vertices(const struct GcSolution *sol,
                                   uintptr_t *buf,
                                   uintptr_t cap,
                                   uintptr_t *written);

/**
 * The solution as a canonical JSON document; free with `gc_string_free`.
 *
 * # Safety
 * `sol` must be a live solution handle.
 */
char *gc_solution_to_json(const struct GcSolution *sol);

/**
 * # Safety
 * `s` must come from `gc_solution_to_json` and not have been freed.
 */
void gc_string_free(char *s);

/**
 * Build the intersection graph of an instance and report its edge count;
 * a cheap way for bindings to sanity-check an instance.
 *
 * # Safety
 * `inst` must be a live instance handle; `edges_out` may be null.
 */
enum GcStatus gc_instance_edge_count(const struct GcInstance *inst, uintptr_t *edges_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEOCLIQUE_H */
