#ifndef WILD_MCKAY_H
#define WILD_MCKAY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WmStatus {
  WM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  WM_STATUS_NULL_ARGUMENT = 1,
  /**
   * Malformed input: not a prime, bad block size, unparsable text.
   */
  WM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Well-formed input outside the domain of the computation (not klt, pole, ...).
   */
  WM_STATUS_PRECONDITION = 3,
  /**
   * An internal cross-check failed.
   */
  WM_STATUS_INTERNAL = 4,
  /**
   * The library panicked; the call had no effect.
   */
  WM_STATUS_PANIC = 5,
} WmStatus;

/**
 * A representation of `Z/p` as a direct sum of Jordan blocks.
 */
typedef struct WmRep WmRep;

/**
 * An exact motivic value.
 */
typedef struct WmValue WmValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or null. The
 * pointer stays valid until the next library call on the same thread.
 */
const char *wm_last_error(void);

/**
 * Builds `V_{dims[0]} + ... + V_{dims[len-1]}` over `F_p`.
 *
 * # Safety
 * `dims` must point to `len` readable integers; `out` must be writable.
 */
enum WmStatus wm_rep_new(uint64_t p, const uint64_t *dims, size_t len, struct WmRep **out);

/**
 * # Safety
 * `rep` must be null or a handle from `wm_rep_new` that has not been freed.
 */
void wm_rep_free(struct WmRep *rep);

/**
 * The stringy motivic invariant `M_st(V/G)`.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum WmStatus wm_m_st(const struct WmRep *rep, struct WmValue **out);

/**
 * # Safety
 * `value` must be null or a handle from this library that has not been freed.
 */
void wm_value_free(struct WmValue *value);

/**
 * The exact JSON record `{"scale", "num", "den"}`.
 *
 * # Safety
 * `value` must be a live handle; `out` must be writable.
 */
enum WmStatus wm_value_to_json(const struct WmValue *value, char **out);

/**
 * Human-readable form such as `L^3 + 2*L^2`.
 *
 * # Safety
 * `value` must be a live handle; `out` must be writable.
 */
enum WmStatus wm_value_to_string(const struct WmValue *value, char **out);

/**
 * The value at `L = q`, as the rational string `a/b`.
 *
 * # Safety
 * `value` must be a live handle; `out` must be writable.
 */
enum WmStatus wm_value_point_count(const struct WmValue *value, uint64_t q, char **out);

/**
 * The value at `L = 1`, as the rational string `a/b`.
 *
 * # Safety
 * `value` must be a live handle; `out` must be writable.
 */
enum WmStatus wm_value_euler_char(const struct WmValue *value, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void wm_string_free(char *s);

/**
 * Number of representative polynomials with jump `jump` over `F_q`, or of
 * extensions when `extensions` is set, as a decimal string.
 *
 * # Safety
 * `out` must be writable.
 */
enum WmStatus wm_covers_count(uint64_t q, uint64_t jump, bool extensions, char **out);

/**
 * Reduces the Laurent polynomial `series` (`exp:coeff,...`) over `F_q` to its
 * normal form; writes JSON `{"rep", "terms", "const_class", "jump"}`.
 *
 * # Safety
 * `series` must be a NUL-terminated string; `out` must be writable.
 */
enum WmStatus wm_covers_reduce(uint64_t p, uint64_t q, const char *series, char **out);

/**
 * Checks the `V_3` invariant relation in characteristic `p`.
 *
 * # Safety
 * `out_ok` must be writable.
 */
enum WmStatus wm_verify_v3(uint64_t p, bool *out_ok);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WILD_MCKAY_H */
