/* C interface to the biso-order library.
 *
 * Channels and Lorenz curves are opaque handles created and destroyed by
 * the bo_* constructors and _free functions. Every fallible call returns a
 * BoStatus; outputs are written through pointers only on BO_STATUS_OK. */

#ifndef BISO_ORDER_H
#define BISO_ORDER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum {
  BO_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  BO_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  BO_STATUS_INVALID_UTF8 = 2,
  /**
   * A scalar argument was outside its domain.
   */
  BO_STATUS_DOMAIN_ERROR = 3,
  /**
   * A channel or distribution failed validation.
   */
  BO_STATUS_VALIDATION_ERROR = 4,
  /**
   * Structurally incompatible arguments.
   */
  BO_STATUS_USAGE_ERROR = 5,
  /**
   * The operation is undefined at alpha = 1.
   */
  BO_STATUS_UNIT_ALPHA = 6,
  BO_STATUS_CALIBRATION_FAILED = 7,
  BO_STATUS_PARSE_ERROR = 8,
  BO_STATUS_INTERNAL_PANIC = 9,
} BoStatus;

/**
 * Channel family selector for bo_calibrate.
 */
typedef enum {
  BO_FAMILY_BSC = 0,
  BO_FAMILY_BEC = 1,
} BoFamily;

/**
 * Verdict of an order comparison, mirroring the library enum.
 */
typedef enum {
  BO_VERDICT_FIRST_MORE_CAPABLE = 0,
  BO_VERDICT_SECOND_MORE_CAPABLE = 1,
  BO_VERDICT_EQUIVALENT = 2,
  BO_VERDICT_INCOMPARABLE = 3,
  BO_VERDICT_INCONCLUSIVE = 4,
} BoVerdict;

/**
 * Opaque handle to a validated BISO channel.
 */
typedef struct BoChannel BoChannel;

/**
 * Opaque handle to an α-Lorenz curve.
 */
typedef struct BoLorenz BoLorenz;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *bo_version(void);

/**
 * Static description of a status code.
 */
const char *bo_status_message(BoStatus status);

/**
 * Parses a channel from its JSON description (`{"pairs": …}` or
 * `{"matrix": …}`). On success the new handle is written to `out` and
 * must be released with bo_channel_free.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be valid for
 * writes.
 */
BoStatus bo_channel_parse_json(const char *json, BoChannel **out);

/**
 * Binary symmetric channel with crossover probability `p` in [0, 1/2].
 *
 * # Safety
 * `out` must be valid for writes.
 */
BoStatus bo_channel_bsc(double p, BoChannel **out);

/**
 * Binary erasure channel with erasure probability `eps` in [0, 1].
 *
 * # Safety
 * `out` must be valid for writes.
 */
BoStatus bo_channel_bec(double eps, BoChannel **out);

/**
 * Seeded random channel with `n_pairs` output pairs; deterministic in
 * `(n_pairs, seed)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
BoStatus bo_channel_random(uintptr_t n_pairs, uint64_t seed, BoChannel **out);

/**
 * Releases a channel handle. Null is ignored.
 *
 * # Safety
 * `ch` must have come from a bo_channel_* constructor and not been freed.
 */
void bo_channel_free(BoChannel *ch);

/**
 * Number of symmetric output pairs, or 0 for a null handle.
 *
 * # Safety
 * `ch` must be a live channel handle or null.
 */
uintptr_t bo_channel_pair_count(const BoChannel *ch);

/**
 * Sibson mutual information at input probability `x`; alpha = 1 gives the
 * Shannon value. Nats.
 *
 * # Safety
 * `ch` must be a live channel handle; `out` must be valid for writes.
 */
BoStatus bo_sibson_mi(const BoChannel *ch, double x, double alpha, double *out);

/**
 * Arimoto mutual information at input probability `x`. Nats.
 *
 * # Safety
 * `ch` must be a live channel handle; `out` must be valid for writes.
 */
BoStatus bo_arimoto_mi(const BoChannel *ch, double x, double alpha, double *out);

/**
 * Shannon mutual information at input probability `x`. Nats.
 *
 * # Safety
 * `ch` must be a live channel handle; `out` must be valid for writes.
 */
BoStatus bo_shannon_mi(const BoChannel *ch, double x, double *out);

/**
 * α-capacity in nats. `out_d_c` receives the pair-mass statistic, or NaN
 * on the Shannon branch; pass null to skip it.
 *
 * # Safety
 * `ch` must be a live channel handle; `out_capacity` must be valid for
 * writes; `out_d_c` may be null.
 */
BoStatus bo_alpha_capacity(const BoChannel *ch,
                           double alpha,
                           double *out_capacity,
                           double *out_d_c);

/**
 * BSC crossover or BEC erasure probability matching `target_capacity`
 * nats at the given order.
 *
 * # Safety
 * `out` must be valid for writes.
 */
BoStatus bo_calibrate(BoFamily family, double target_capacity, double alpha, double *out);

/**
 * Exhaustive order test on a `grid_points` input grid. `out_worst_gap`
 * and `out_witness_x` are optional (pass null to skip).
 *
 * # Safety
 * `a` and `b` must be live channel handles; `out_verdict` must be valid
 * for writes; the remaining outputs may be null.
 */
BoStatus bo_compare_grid(const BoChannel *a,
                         const BoChannel *b,
                         double alpha,
                         uintptr_t grid_points,
                         BoVerdict *out_verdict,
                         double *out_worst_gap,
                         double *out_witness_x);

/**
 * Lorenz-dominance sufficient condition. `out_capacity_gap` is optional.
 *
 * # Safety
 * `a` and `b` must be live channel handles; `out_verdict` must be valid
 * for writes; `out_capacity_gap` may be null.
 */
BoStatus bo_compare_sufficient(const BoChannel *a,
                               const BoChannel *b,
                               double alpha,
                               BoVerdict *out_verdict,
                               double *out_capacity_gap);

/**
 * Whether the calibrated BSC/BEC extremality sandwich holds around `ch`
 * (1) or was violated (0).
 *
 * # Safety
 * `ch` must be a live channel handle; `out_holds` must be valid for
 * writes.
 */
BoStatus bo_extremal_sandwich(const BoChannel *ch,
                              double alpha,
                              uintptr_t grid_points,
                              int *out_holds);

/**
 * Builds the α-Lorenz curve of a channel. The handle must be released
 * with bo_lorenz_free.
 *
 * # Safety
 * `ch` must be a live channel handle; `out` must be valid for writes.
 */
BoStatus bo_lorenz_new(const BoChannel *ch, double alpha, BoLorenz **out);

/**
 * Releases a Lorenz-curve handle. Null is ignored.
 *
 * # Safety
 * `curve` must have come from bo_lorenz_new and not been freed.
 */
void bo_lorenz_free(BoLorenz *curve);

/**
 * Number of linear segments, or 0 for a null handle.
 *
 * # Safety
 * `curve` must be a live curve handle or null.
 */
uintptr_t bo_lorenz_segment_count(const BoLorenz *curve);

/**
 * Right endpoint d_C of the curve domain, or NaN for a null handle.
 *
 * # Safety
 * `curve` must be a live curve handle or null.
 */
double bo_lorenz_d_c(const BoLorenz *curve);

/**
 * Breakpoint `t_index` (0 ≤ index ≤ segment count) and the slope of
 * segment `index` (index < segment count).
 *
 * # Safety
 * `curve` must be a live curve handle; `out` must be valid for writes.
 */
BoStatus bo_lorenz_breakpoint(const BoLorenz *curve, uintptr_t index, double *out);

/**
 * Slope of segment `index`.
 *
 * # Safety
 * `curve` must be a live curve handle; `out` must be valid for writes.
 */
BoStatus bo_lorenz_step(const BoLorenz *curve, uintptr_t index, double *out);

/**
 * Evaluates the curve at `t` in [0, d_C].
 *
 * # Safety
 * `curve` must be a live curve handle; `out` must be valid for writes.
 */
BoStatus bo_lorenz_eval(const BoLorenz *curve, double t, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BISO_ORDER_H */
