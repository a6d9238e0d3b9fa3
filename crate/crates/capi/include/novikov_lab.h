#ifndef NOVIKOV_LAB_H
#define NOVIKOV_LAB_H

/* Generated by cbindgen from novikov-lab-capi; edit the Rust source instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Isomorphism verdict from `nvk_algebra_isomorphic`.
 */
typedef enum NvkIsoResult {
  /**
   * A witness was found and reverified.
   */
  NVK_ISO_RESULT_ISOMORPHIC = 0,
  /**
   * An invariant separates the two algebras.
   */
  NVK_ISO_RESULT_DISTINCT = 1,
  /**
   * The search budget ran out without a verdict.
   */
  NVK_ISO_RESULT_UNKNOWN = 2,
} NvkIsoResult;

/**
 * Result of every fallible call. Nonzero means the out-parameters are
 * untouched except where documented, and `nvk_last_error` explains why.
 */
typedef enum NvkStatus {
  NVK_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  NVK_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  NVK_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text did not parse.
   */
  NVK_STATUS_PARSE_ERROR = 3,
  /**
   * The operation is undefined for these inputs (dimension mismatch,
   * non-cocycle form, non-nilpotent algebra, excluded parameters, ...).
   */
  NVK_STATUS_DOMAIN_ERROR = 4,
  /**
   * No catalog entry with that identifier (or no entries in a dimension).
   */
  NVK_STATUS_UNKNOWN_ENTRY = 5,
  /**
   * An internal invariant failed; the library state is still sound.
   */
  NVK_STATUS_PANIC = 6,
} NvkStatus;

/**
 * Opaque handle to a finite-dimensional algebra with rational structure
 * constants.
 */
typedef struct NvkAlgebra NvkAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *nvk_version(void);

/**
 * Message for the calling thread's most recent failure, or NULL after a
 * success. The pointer is valid until this thread's next library call.
 */
const char *nvk_last_error(void);

/**
 * Release a string obtained from a `char **` out-parameter. NULL is a no-op.
 */
void nvk_string_free(char *s);

/**
 * Parse the text format (`dim n`, optional `param` lines, product lines)
 * into a fresh handle.
 */
enum NvkStatus nvk_algebra_parse(const char *text, struct NvkAlgebra **out);

/**
 * Release an algebra handle. NULL is a no-op.
 */
void nvk_algebra_free(struct NvkAlgebra *a);

/**
 * Dimension of the algebra; 0 if the handle is NULL.
 */
size_t nvk_algebra_dim(const struct NvkAlgebra *a);

/**
 * Serialize the multiplication table back into the text format.
 */
enum NvkStatus nvk_algebra_serialize(const struct NvkAlgebra *a, char **out);

/**
 * True when both defining identities hold on all basis triples.
 */
enum NvkStatus nvk_algebra_is_novikov(const struct NvkAlgebra *a, bool *out);

/**
 * True when the descending power chain reaches zero.
 */
enum NvkStatus nvk_algebra_is_nilpotent(const struct NvkAlgebra *a, bool *out);

/**
 * True when a single element generates the algebra. Only defined for
 * nilpotent algebras; otherwise `NVK_STATUS_DOMAIN_ERROR`.
 */
enum NvkStatus nvk_algebra_is_one_generated(const struct NvkAlgebra *a, bool *out);

/**
 * Dimension of the annihilator (two-sided).
 */
enum NvkStatus nvk_algebra_annihilator_dim(const struct NvkAlgebra *a, size_t *out);

/**
 * Dimensions of the cocycle space, the coboundary space, and the second
 * cohomology. Any of the out-pointers may be NULL to skip that value.
 */
enum NvkStatus nvk_cohomology_dims(const struct NvkAlgebra *a, size_t *z2, size_t *b2, size_t *h2);

/**
 * Central extension of `a` by `len` cocycles, each a combination like
 * `"2 D13 - D22"` on the basis pairings of `a`. Fails with
 * `NVK_STATUS_DOMAIN_ERROR` when a form is not a cocycle.
 */
enum NvkStatus nvk_algebra_extend(const struct NvkAlgebra *a,
                                  const char *const *cocycles,
                                  size_t len,
                                  struct NvkAlgebra **out);

/**
 * Decide whether two algebras are isomorphic: invariants first, then a
 * generator-image search in both directions. `budget` 0 means the default
 * search budget. `NVK_STATUS_OK` with `NVK_ISO_RESULT_UNKNOWN` is a normal
 * outcome for hostile inputs, not an error.
 */
enum NvkStatus nvk_algebra_isomorphic(const struct NvkAlgebra *a,
                                      const struct NvkAlgebra *b,
                                      size_t budget,
                                      enum NvkIsoResult *out);

/**
 * Number of catalog entries.
 */
size_t nvk_catalog_len(void);

/**
 * Identifier of the catalog entry at `index` (static string), or NULL when
 * the index is out of range.
 */
const char *nvk_catalog_id(size_t index);

/**
 * Instantiate a catalog entry at the given parameters (NULL or `""` for the
 * defaults), rejecting values on the entry's excluded locus.
 */
enum NvkStatus nvk_catalog_instantiate(const char *id, const char *params, struct NvkAlgebra **out);

/**
 * Recheck one catalog entry at the given parameters and return the full
 * report as a JSON document (same schema as the CLI's `orbit-verify`
 * `checks`/`data` sections). Degenerate parameter loci are reported, not
 * failed.
 */
enum NvkStatus nvk_catalog_verify(const char *id,
                                  const char *params,
                                  uint64_t seed,
                                  char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NOVIKOV_LAB_H */
