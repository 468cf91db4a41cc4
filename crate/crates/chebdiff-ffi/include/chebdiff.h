/* C interface of the chebdiff local Chebyshev differentiation library. */

#ifndef CHEBDIFF_H
#define CHEBDIFF_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Kind of a derivative estimate.
 */
typedef enum ChebdiffEstimateKind {
  CHEBDIFF_ESTIMATE_KIND_CLASSICAL = 0,
  CHEBDIFF_ESTIMATE_KIND_SUBGRADIENT = 1,
  CHEBDIFF_ESTIMATE_KIND_WEAK = 2,
} ChebdiffEstimateKind;

typedef enum ChebdiffMode {
  CHEBDIFF_MODE_CLASSICAL = 0,
  CHEBDIFF_MODE_SUBGRADIENT = 1,
  CHEBDIFF_MODE_WEAK = 2,
} ChebdiffMode;

/**
 * Result codes; zero is success.
 */
typedef enum ChebdiffStatus {
  CHEBDIFF_STATUS_OK = 0,
  CHEBDIFF_STATUS_INVALID_ARGUMENT = 1,
  CHEBDIFF_STATUS_NON_FINITE = 2,
  CHEBDIFF_STATUS_DOMAIN_VIOLATION = 3,
  CHEBDIFF_STATUS_SHRINK_EXHAUSTED = 4,
  CHEBDIFF_STATUS_LINE_SEARCH_FAILED = 5,
  CHEBDIFF_STATUS_INTERNAL_ERROR = 6,
} ChebdiffStatus;

/**
 * Opaque interpolant handle.
 */
typedef struct ChebdiffInterpolant ChebdiffInterpolant;

/**
 * Window-search configuration mirrored across the ABI.
 */
typedef struct ChebdiffDiffConfig {
  /**
   * Initial window half-width.
   */
  double h;
  /**
   * Gauss-Lobatto samples per window.
   */
  size_t node_count;
  /**
   * Factor in (0, 1) applied to `h` while the window is inadmissible.
   */
  double shrink_factor;
  uint32_t max_shrinks;
  /**
   * Queries within this distance of a kink take the one-sided branch.
   */
  double kink_tolerance;
  enum ChebdiffMode mode;
} ChebdiffDiffConfig;

/**
 * Scalar callback: `f(x, user_data)`. The unwind ABI lets a panicking
 * non-C callback surface as `CHEBDIFF_STATUS_INTERNAL_ERROR` instead of
 * aborting; plain C callbacks are unaffected.
 */
typedef double (*ChebdiffScalarFn)(double x, void *user_data);

/**
 * Flattened derivative estimate.
 *
 * Classical estimates fill `value` and the window; one-sided estimates
 * fill `left`/`right` (and `value` with their mean), with the window
 * spanning both one-sided windows.
 */
typedef struct ChebdiffEstimate {
  enum ChebdiffEstimateKind kind;
  double value;
  double left;
  double right;
  double window_lo;
  double window_hi;
  uint32_t shrinks;
} ChebdiffEstimate;

/**
 * Field callback: `f(coords, len, user_data)`.
 */
typedef double (*ChebdiffFieldFn)(const double *coords, size_t len, void *user_data);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Short static description of a status code.
 */
const char *chebdiff_status_message(enum ChebdiffStatus status);

/**
 * Defaults matching the library: h = 1e-4, 5 nodes, halving shrink, up to
 * 52 shrinks, exact kink matching, classical mode.
 */
struct ChebdiffDiffConfig chebdiff_diff_config_default(void);

/**
 * Interpolate `f` on the Gauss-Lobatto nodes of `[lo, hi]` and hand back an
 * owned handle.
 *
 * # Safety
 * `f` must be callable with any `x` in `[lo, hi]` plus `user_data`, and
 * `out` must point to writable storage for one pointer.
 */
enum ChebdiffStatus chebdiff_interpolant_fit(ChebdiffScalarFn f,
                                             void *user_data,
                                             double lo,
                                             double hi,
                                             size_t node_count,
                                             struct ChebdiffInterpolant **out);

/**
 * Free a handle returned by this library. Null is ignored.
 *
 * # Safety
 * `p` must have been produced by this library and not freed before.
 */
void chebdiff_interpolant_free(struct ChebdiffInterpolant *p);

/**
 * Number of stored coefficients.
 *
 * # Safety
 * `p` must be a live handle from this library.
 */
size_t chebdiff_interpolant_node_count(const struct ChebdiffInterpolant *p);

/**
 * Copy the Chebyshev coefficients into `buf` (capacity `len`, which must be
 * at least `node_count`).
 *
 * # Safety
 * `p` must be a live handle; `buf` must point to `len` writable doubles.
 */
enum ChebdiffStatus chebdiff_interpolant_coeffs(const struct ChebdiffInterpolant *p,
                                                double *buf,
                                                size_t len);

/**
 * Evaluate the interpolant at `x`.
 *
 * # Safety
 * `p` must be a live handle; `out` must point to a writable double.
 */
enum ChebdiffStatus chebdiff_interpolant_eval(const struct ChebdiffInterpolant *p,
                                              double x,
                                              double *out);

/**
 * Exact derivative of the interpolant as a new handle.
 *
 * # Safety
 * `p` must be a live handle; `out` must point to writable pointer storage.
 */
enum ChebdiffStatus chebdiff_interpolant_derivative(const struct ChebdiffInterpolant *p,
                                                    struct ChebdiffInterpolant **out);

/**
 * Derivative estimate of `f` at `x` with known kinks.
 *
 * `kinks`/`kink_count` may be null/zero. The kink locations must lie inside
 * `[domain_lo, domain_hi]`, which also clamps the windows.
 *
 * # Safety
 * `f` must be callable on the domain; `kinks` must point to `kink_count`
 * doubles when non-null; `cfg` and `out` must be valid.
 */
enum ChebdiffStatus chebdiff_derivative_at(ChebdiffScalarFn f,
                                           void *user_data,
                                           double x,
                                           const struct ChebdiffDiffConfig *cfg,
                                           const double *kinks,
                                           size_t kink_count,
                                           double domain_lo,
                                           double domain_hi,
                                           struct ChebdiffEstimate *out);

/**
 * Central difference quotient over `[x-h, x+h]`.
 *
 * # Safety
 * `f` must be callable at `x - h` and `x + h`; `out` must be writable.
 */
enum ChebdiffStatus chebdiff_central_difference(ChebdiffScalarFn f,
                                                void *user_data,
                                                double x,
                                                double h,
                                                double *out);

/**
 * Gradient of a field at `x`, one local Chebyshev directional derivative
 * per coordinate, written into `grad_out`.
 *
 * # Safety
 * `f` must be callable near `x`; `x` must point to `dim` doubles and
 * `grad_out` to `dim` writable doubles.
 */
enum ChebdiffStatus chebdiff_gradient(ChebdiffFieldFn f,
                                      void *user_data,
                                      const double *x,
                                      size_t dim,
                                      const struct ChebdiffDiffConfig *cfg,
                                      double *grad_out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CHEBDIFF_H */
