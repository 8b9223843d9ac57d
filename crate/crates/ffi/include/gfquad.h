#ifndef GFQUAD_H
#define GFQUAD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stdint.h>

/**
 * Largest `q_max` accepted by [`gfq_verify`].
 */
#define GFQ_VERIFY_MAX_Q 256

/**
 * Result code of every fallible call.
 */
typedef enum GfqStatus {
  GFQ_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  GFQ_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  GFQ_STATUS_INVALID_UTF8 = 2,
  /**
   * The input could not be parsed or violates a precondition.
   */
  GFQ_STATUS_INVALID_ARGUMENT = 3,
  /**
   * A field could not be constructed from the given parameters.
   */
  GFQ_STATUS_INVALID_FIELD = 4,
  /**
   * An internal error; the library state is unaffected.
   */
  GFQ_STATUS_INTERNAL = 5,
} GfqStatus;

/**
 * Opaque handle to a finite field.
 */
typedef struct GfqField GfqField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *gfq_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library that has not
 * been freed yet.
 */
void gfq_string_free(char *s);

/**
 * Builds GF(p^m). `modulus` (e.g. `"x^3+x+1"`) and `alpha` (canonical
 * integer, `"[c0,c1,...]"` or a polynomial in x) may be null for the
 * defaults. On success `*out` receives a handle for [`gfq_field_free`].
 *
 * # Safety
 * String arguments must be null or NUL-terminated; `out` must be writable.
 */
enum GfqStatus gfq_field_new(uint64_t p,
                             uint32_t m,
                             const char *modulus,
                             const char *alpha,
                             struct GfqField **out);

/**
 * Releases a field handle. Null is ignored.
 *
 * # Safety
 * `f` must be null or a live handle from [`gfq_field_new`].
 */
void gfq_field_free(struct GfqField *f);

/**
 * Order q of the field, or 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
uint32_t gfq_field_order(const struct GfqField *f);

/**
 * Decides primitivity of the monic quadratic `poly`. `*primitive` receives
 * the decision; if `verdict_json` is non-null it receives the verdict
 * record `{primitive, reason, h_terms?, q_class}`.
 *
 * # Safety
 * `f` must be a live handle, `poly` NUL-terminated, `primitive` writable,
 * `verdict_json` null or writable.
 */
enum GfqStatus gfq_test(const struct GfqField *f,
                        const char *poly,
                        bool *primitive,
                        char **verdict_json);

/**
 * Number of primitive quadratics produced by the enumeration.
 *
 * # Safety
 * `f` must be a live handle and `count` writable.
 */
enum GfqStatus gfq_enumerate_count(const struct GfqField *f, uint64_t *count);

/**
 * The enumeration as JSON: index sets, count check and rows
 * `{q, b, c, b_log, c_log}`.
 *
 * # Safety
 * `f` must be a live handle and `out` writable.
 */
enum GfqStatus gfq_enumerate_json(const struct GfqField *f, char **out);

/**
 * Factorization of `x^(q+1) - c` as JSON.
 *
 * # Safety
 * `f` must be a live handle, `c` NUL-terminated and `out` writable.
 */
enum GfqStatus gfq_factor_json(const struct GfqField *f, const char *c, char **out);

/**
 * Cross-validates the characterization and the enumeration against the
 * order computation for every prime power `q <= q_max`. `*passed` receives
 * the overall outcome; `report_json`, if non-null, the per-field records.
 *
 * # Safety
 * `passed` must be writable; `report_json` null or writable.
 */
enum GfqStatus gfq_verify(uint64_t q_max, bool *passed, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GFQUAD_H */
