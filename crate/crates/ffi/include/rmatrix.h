#ifndef RMATRIX_H
#define RMATRIX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RmxStatus {
  RMX_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  RMX_STATUS_NULL_ARGUMENT = 1,
  /**
   * An argument was outside the domain of the operation.
   */
  RMX_STATUS_DOMAIN = 2,
  /**
   * The request exceeded a resource cap.
   */
  RMX_STATUS_RESOURCE = 3,
  /**
   * An internal panic was caught at the boundary.
   */
  RMX_STATUS_PANIC = 4,
} RmxStatus;

/**
 * Which verification [`rmx_verify`] runs, and how it reads `a`, `b`, `c`.
 */
typedef enum RmxCheck {
  /**
   * `(n, m) = (a, b)`
   */
  RMX_CHECK_INTERTWINER = 0,
  /**
   * `(n, m, l) = (a, b, c)`
   */
  RMX_CHECK_HEXAGON_LEFT = 1,
  /**
   * `(n, m, l) = (a, b, c)`
   */
  RMX_CHECK_HEXAGON_RIGHT = 2,
  /**
   * `(n, m, l) = (a, b, c)`
   */
  RMX_CHECK_P_EQUALS_Q = 3,
  /**
   * `(n, m) = (a, b)`
   */
  RMX_CHECK_TRIANGULARITY = 4,
  /**
   * `(n, m, l) = (a, b, c)`
   */
  RMX_CHECK_YANG_BAXTER = 5,
  /**
   * `k_max = a`
   */
  RMX_CHECK_COUNIT_R = 6,
  /**
   * `(a, b, c)`
   */
  RMX_CHECK_WCS_COASSOC = 7,
  /**
   * `a`
   */
  RMX_CHECK_WCS_UNIT = 8,
  /**
   * `n_max = a`
   */
  RMX_CHECK_COUNIT_LAW = 9,
  /**
   * `n_max = a`
   */
  RMX_CHECK_COASSOCIATIVITY = 10,
  /**
   * space `{1..a}`, tensor power `b`
   */
  RMX_CHECK_BRAID_RELATIONS = 11,
  /**
   * space `{1..a}`
   */
  RMX_CHECK_INVOLUTION = 12,
} RmxCheck;

/**
 * Opaque handle to an R-matrix block `R^{(n,m)}`.
 */
typedef struct RmxRMatrix RmxRMatrix;

/**
 * Opaque handle to a verification report.
 */
typedef struct RmxReport RmxReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *rmx_last_error_message(void);

/**
 * `χ_{n,m}(i, j)`.
 *
 * # Safety
 * `out_i` and `out_j` must be null or valid for writes.
 */
enum RmxStatus rmx_chi(uint32_t n,
                       uint32_t m,
                       uint32_t i,
                       uint32_t j,
                       uint32_t *out_i,
                       uint32_t *out_j);

/**
 * Builds `R^{(n,m)}`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum RmxStatus rmx_rmatrix_new(uint32_t n, uint32_t m, struct RmxRMatrix **out);

/**
 * `R^{(n,m)}(e_i ⊗ e_j) = e_{out_i} ⊗ e_{out_j}`.
 *
 * # Safety
 * `r` must be null or a live handle from [`rmx_rmatrix_new`]; the out
 * pointers must be null or valid for writes.
 */
enum RmxStatus rmx_rmatrix_apply(const struct RmxRMatrix *r,
                                 uint32_t i,
                                 uint32_t j,
                                 uint32_t *out_i,
                                 uint32_t *out_j);

/**
 * Releases an R-matrix handle. Null is ignored.
 *
 * # Safety
 * `r` must be null or a handle from [`rmx_rmatrix_new`] not freed before.
 */
void rmx_rmatrix_free(struct RmxRMatrix *r);

/**
 * Runs one verification. Unused parameters are ignored.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum RmxStatus rmx_verify(enum RmxCheck check,
                          uint32_t a,
                          uint32_t b,
                          uint32_t c,
                          struct RmxReport **out);

/**
 * Whether the checked identity held.
 *
 * # Safety
 * `report` must be null or a live report handle; `out` must be null or
 * valid for writes.
 */
enum RmxStatus rmx_report_passed(const struct RmxReport *report, bool *out);

/**
 * The report as a one-line JSON object; free with [`rmx_string_free`].
 *
 * # Safety
 * `report` must be null or a live report handle; `out` must be null or
 * valid for writes.
 */
enum RmxStatus rmx_report_to_json(const struct RmxReport *report, char **out);

/**
 * Releases a report handle. Null is ignored.
 *
 * # Safety
 * `report` must be null or a handle from [`rmx_verify`] not freed before.
 */
void rmx_report_free(struct RmxReport *report);

/**
 * `Δ(E^{(n)}_{i,j})` as a block-family JSON document; free with
 * [`rmx_string_free`].
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum RmxStatus rmx_delta_json(uint32_t n, uint32_t i, uint32_t j, char **out);

/**
 * Serializes a structural object named like the CLI's `--dump` argument,
 * e.g. `"chi:2,3"` or `"P:2,3,2"`; free with [`rmx_string_free`].
 *
 * # Safety
 * `target` must be null or a NUL-terminated string; `out` must be null or
 * valid for writes.
 */
enum RmxStatus rmx_dump_json(const char *target, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not freed before.
 */
void rmx_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RMATRIX_H */
