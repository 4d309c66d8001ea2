#ifndef MULTISEG_H
#define MULTISEG_H

/* Generated by cbindgen from multiseg-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
enum MsegStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  MSEG_STATUS_OK = 0,
  MSEG_STATUS_LINE_MISMATCH = 1,
  MSEG_STATUS_NON_INTEGRAL_OR_NEGATIVE_LENGTH = 2,
  MSEG_STATUS_UNION_NOT_A_SEGMENT = 3,
  MSEG_STATUS_BASIS_MISMATCH = 4,
  MSEG_STATUS_NOT_A_LADDER = 5,
  MSEG_STATUS_CLOSURE_TOO_LARGE = 6,
  MSEG_STATUS_OUT_OF_RANGE = 7,
  MSEG_STATUS_INVALID_INDEX = 8,
  MSEG_STATUS_NOT_SPEH = 9,
  MSEG_STATUS_INTERNAL_INCONSISTENCY = 10,
  MSEG_STATUS_AGREEMENT_FAILURE = 11,
  MSEG_STATUS_PARSE = 12,
  MSEG_STATUS_IO = 13,
  /**
   * A required pointer argument was null.
   */
  MSEG_STATUS_NULL_POINTER = 100,
  /**
   * A string argument was not valid UTF-8.
   */
  MSEG_STATUS_INVALID_UTF8 = 101,
  /**
   * The call panicked; state is unchanged.
   */
  MSEG_STATUS_PANIC = 102,
};
#ifndef __cplusplus
typedef int32_t MsegStatus;
#endif // __cplusplus

/**
 * Opaque multisegment. Create with `mseg_parse_json`/`mseg_speh`/
 * `mseg_dual`; release with `mseg_handle_free`.
 */
typedef struct MsegHandle MsegHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a multisegment from its JSON form
 * `{"line":"rho","segments":[{"b":"-1","e":"0"},…]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be a valid pointer.
 */
MsegStatus mseg_parse_json(const char *json, struct MsegHandle **out);

/**
 * Serialize a multisegment to its JSON form. The string is released with
 * `mseg_string_free`.
 *
 * # Safety
 * `h` must be a live handle from this library; `out` must be valid.
 */
MsegStatus mseg_to_json(const struct MsegHandle *h, char **out);

/**
 * Build the Speh multisegment with `n` rows of width `d`, centered at the
 * exponent `shift` ("0", "-2", "3/2"; null means "0").
 *
 * # Safety
 * String arguments must be null or nul-terminated; `out` must be valid.
 */
MsegStatus mseg_speh(uint32_t n,
                     uint32_t d,
                     const char *shift,
                     const char *line,
                     struct MsegHandle **out);

/**
 * Apply the involution; `left_side` selects the left variant.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid.
 */
MsegStatus mseg_dual(const struct MsegHandle *h, bool left_side, struct MsegHandle **out);

/**
 * Composition-series report for the (n, d, k) frame product, as the CLI's
 * JSON. `minus` flips the twist sign; `langlands` selects the L-basis
 * report (which self-checks through the involution).
 *
 * # Safety
 * `line` must be null or nul-terminated; `out` must be valid.
 */
MsegStatus mseg_compose_json(uint32_t n,
                             uint32_t d,
                             uint32_t k,
                             bool minus,
                             bool langlands,
                             const char *line,
                             char **out);

/**
 * Independent re-derivation of the factor set, as the CLI's JSON.
 * `max_nodes` caps each closure walk; 0 selects the default cap.
 *
 * # Safety
 * `line` must be null or nul-terminated; `out` must be valid.
 */
MsegStatus mseg_oracle_json(uint32_t n,
                            uint32_t d,
                            uint32_t k,
                            uintptr_t max_nodes,
                            const char *line,
                            char **out);

/**
 * Release a handle. Passing null is a no-op.
 *
 * # Safety
 * `h` must be null or a handle not yet freed.
 */
void mseg_handle_free(struct MsegHandle *h);

/**
 * Release a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void mseg_string_free(char *s);

/**
 * Static name of a status code ("Ok", "Parse", …); never freed, never null.
 */
const char *mseg_status_name(int32_t code);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MULTISEG_H */
