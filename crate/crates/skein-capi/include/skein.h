/* C interface to the skein library. */

#ifndef SKEIN_H
#define SKEIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call into this library.
 */
typedef enum SkeinStatus {
  /**
   * The call succeeded and out-parameters are filled in.
   */
  SKEIN_STATUS_OK = 0,
  /**
   * An oracle comparison ran to completion and the sides differ.
   */
  SKEIN_STATUS_VERIFY_FAILED = 1,
  /**
   * Arguments were rejected (bad slope, negative color, parse error).
   */
  SKEIN_STATUS_INVALID_INPUT = 2,
  /**
   * An exact division had a remainder.
   */
  SKEIN_STATUS_NOT_DIVISIBLE = 3,
  /**
   * The requested diagram exceeds the state-sum crossing budget.
   */
  SKEIN_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * A required pointer argument was null.
   */
  SKEIN_STATUS_NULL_POINTER = 5,
} SkeinStatus;

/**
 * A torus cable expansion in the annular basis, with its framing.
 */
typedef struct SkeinExpansion SkeinExpansion;

/**
 * An exact Laurent polynomial in the variable A.
 */
typedef struct SkeinLaurent SkeinLaurent;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying library, as a static string.
 */
const char *skein_version(void);

/**
 * Parses a Laurent polynomial from its text form, e.g. `{-2:1, 2:1}`.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` must be a valid
 * pointer to receive the handle.
 */
enum SkeinStatus skein_laurent_parse(const char *text, struct SkeinLaurent **out);

/**
 * Formats a Laurent polynomial into a newly allocated string; release it
 * with `skein_string_free`.
 *
 * # Safety
 * `poly` must be a live handle from this library and `out` a valid
 * pointer.
 */
enum SkeinStatus skein_laurent_format(const struct SkeinLaurent *poly, char **out);

/**
 * The quantum integer [m].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SkeinStatus skein_laurent_quantum_integer(int64_t m, struct SkeinLaurent **out);

/**
 * Sum of two polynomials.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum SkeinStatus skein_laurent_add(const struct SkeinLaurent *a,
                                   const struct SkeinLaurent *b,
                                   struct SkeinLaurent **out);

/**
 * Product of two polynomials.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum SkeinStatus skein_laurent_mul(const struct SkeinLaurent *a,
                                   const struct SkeinLaurent *b,
                                   struct SkeinLaurent **out);

/**
 * Exact division; `NotDivisible` when a remainder is left.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum SkeinStatus skein_laurent_divide_exact(const struct SkeinLaurent *a,
                                            const struct SkeinLaurent *b,
                                            struct SkeinLaurent **out);

/**
 * Evaluates at the root `A = exp(i*pi/(2(r+1)))`, writing the real and
 * imaginary parts.
 *
 * # Safety
 * `poly` must be a live handle; `out_re` and `out_im` must be valid
 * pointers.
 */
enum SkeinStatus skein_laurent_eval_root(const struct SkeinLaurent *poly,
                                         uint32_t r,
                                         double *out_re,
                                         double *out_im);

/**
 * Releases a polynomial handle; a null is ignored.
 *
 * # Safety
 * `poly` must be a handle from this library not yet freed, or null.
 */
void skein_laurent_free(struct SkeinLaurent *poly);

/**
 * Expands the `(p, q)` cable of the color-`color` basis element around a
 * core colored `core`, at the canonical framing `p*q`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SkeinStatus skein_expand(int64_t p,
                              int64_t q,
                              int64_t color,
                              int64_t core,
                              struct SkeinExpansion **out);

/**
 * Formats an expansion in the same two-line text form the command line
 * tool prints; release with `skein_string_free`.
 *
 * # Safety
 * `expansion` must be a live handle and `out` a valid pointer.
 */
enum SkeinStatus skein_expansion_format(const struct SkeinExpansion *expansion, char **out);

/**
 * Releases an expansion handle; a null is ignored.
 *
 * # Safety
 * `expansion` must be a handle from this library not yet freed, or null.
 */
void skein_expansion_free(struct SkeinExpansion *expansion);

/**
 * The colored invariant of the `(p, q)` torus knot at the given framing.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SkeinStatus skein_torus_knot_jones(int64_t p,
                                        int64_t q,
                                        int64_t color,
                                        int64_t framing,
                                        struct SkeinLaurent **out);

/**
 * Recomputes the `(p, q)` expansion of `e_color` from a brute-force
 * diagram state sum and compares: `Ok` when the sides agree,
 * `VerifyFailed` when they differ, `BudgetExceeded` when the cabled
 * diagram is too large to enumerate.
 */
enum SkeinStatus skein_oracle_verify(int64_t p, int64_t q, int64_t color);

/**
 * Releases a string allocated by this library; a null is ignored.
 *
 * # Safety
 * `text` must be a string from this library not yet freed, or null.
 */
void skein_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SKEIN_H */
