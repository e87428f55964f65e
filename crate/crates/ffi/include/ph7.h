#ifndef PH7_H
#define PH7_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Ph7Status {
  PH7_STATUS_OK = 0,
  PH7_STATUS_NO_SOLUTIONS = 2,
  PH7_STATUS_INVALID_INPUT = 3,
  PH7_STATUS_INTERNAL = 4,
  PH7_STATUS_NULL_POINTER = 5,
  PH7_STATUS_INDEX_OUT_OF_RANGE = 6,
  PH7_STATUS_PANIC = 7,
} Ph7Status;

/**
 * Values accepted by [`ph7_select_best`].
 */
typedef enum Ph7Criterion {
  PH7_CRITERION_ROTATION_INDEX = 0,
  PH7_CRITERION_CURVATURE_L2 = 1,
  PH7_CRITERION_RADIAL = 2,
} Ph7Criterion;

/**
 * Opaque solution set. Curves are stored in the frame of the input data.
 */
typedef struct Ph7SolutionSet Ph7SolutionSet;

typedef struct Ph7Point {
  double x;
  double y;
} Ph7Point;

typedef struct Ph7Unknowns {
  double d;
  double u1;
  double v1;
  double u2;
  double v2;
} Ph7Unknowns;

/**
 * `e_kappa`, `d_rad` and `argmax_t` are NaN unless `has_arc_metrics` is 1.
 */
typedef struct Ph7Metrics {
  double r_abs;
  double e_kappa;
  double d_rad;
  double argmax_t;
  int has_arc_metrics;
} Ph7Metrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Solves the circular-arc problem with half angle `alpha` in canonical
 * position. On success `*out` receives a new handle (possibly empty).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum Ph7Status ph7_solve_arc(double alpha, struct Ph7SolutionSet **out);

/**
 * Solves canonical data (`q0 = 0`, `q1 = 1`). An empty result is returned as
 * a valid handle with length zero and status `PH7_STATUS_NO_SOLUTIONS`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum Ph7Status ph7_solve_g2(double theta0,
                            double theta1,
                            double k0,
                            double k1,
                            double length,
                            struct Ph7SolutionSet **out);

/**
 * Solves data in arbitrary position: end points `q0`, `q1`, unit tangents
 * `g0`, `g1`, curvatures and arc length.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum Ph7Status ph7_solve_g2_endpoints(struct Ph7Point q0,
                                      struct Ph7Point q1,
                                      struct Ph7Point g0,
                                      struct Ph7Point g1,
                                      double k0,
                                      double k1,
                                      double length,
                                      struct Ph7SolutionSet **out);

/**
 * Number of solutions; 0 for a null handle.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
size_t ph7_solution_set_len(const struct Ph7SolutionSet *handle);

/**
 * Unknowns of solution `index` (solutions are sorted by `d`).
 *
 * # Safety
 * `handle` must be a live handle and `out` writable.
 */
enum Ph7Status ph7_solution_unknowns(const struct Ph7SolutionSet *handle,
                                     size_t index,
                                     struct Ph7Unknowns *out);

/**
 * Writes the eight Bézier control points of solution `index`.
 *
 * # Safety
 * `handle` must be a live handle and `out` must point to 8 writable points.
 */
enum Ph7Status ph7_solution_control_points(const struct Ph7SolutionSet *handle,
                                           size_t index,
                                           struct Ph7Point *out);

/**
 * Point of solution `index` at parameter `t ∈ [0, 1]`.
 *
 * # Safety
 * `handle` must be a live handle and `out` writable.
 */
enum Ph7Status ph7_solution_eval(const struct Ph7SolutionSet *handle,
                                 size_t index,
                                 double t,
                                 struct Ph7Point *out);

/**
 * Signed curvature of solution `index` at `t`.
 *
 * # Safety
 * `handle` must be a live handle and `out` writable.
 */
enum Ph7Status ph7_solution_curvature(const struct Ph7SolutionSet *handle,
                                      size_t index,
                                      double t,
                                      double *out);

/**
 * Selection metrics of solution `index`, computed in the canonical frame.
 *
 * # Safety
 * `handle` must be a live handle and `out` writable.
 */
enum Ph7Status ph7_solution_metrics(const struct Ph7SolutionSet *handle,
                                    size_t index,
                                    struct Ph7Metrics *out);

/**
 * Index of the best solution under `criterion` (a [`Ph7Criterion`] value).
 *
 * # Safety
 * `handle` must be a live handle and `out_index` writable.
 */
enum Ph7Status ph7_select_best(const struct Ph7SolutionSet *handle,
                               int criterion,
                               size_t *out_index);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `handle` must be null or a handle not yet freed.
 */
void ph7_solution_set_free(struct Ph7SolutionSet *handle);

/**
 * Message of the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ph7_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ph7_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PH7_H */
