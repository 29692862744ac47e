#ifndef HYPERCERT_H
#define HYPERCERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_UTF8 = 2,
  HC_STATUS_INVALID_ARGUMENT = 3,
  HC_STATUS_INVALID_HYPERGRAPH = 4,
  HC_STATUS_CEILING_EXCEEDED = 5,
  HC_STATUS_JSON = 6,
  HC_STATUS_INTERNAL = 7,
} HcStatus;

typedef enum HcFamily {
  HC_FAMILY_H2 = 0,
  HC_FAMILY_HK = 1,
  HC_FAMILY_JK = 2,
  HC_FAMILY_SUDAKOV_G = 3,
  HC_FAMILY_HF = 4,
} HcFamily;

typedef enum HcSearch {
  HC_SEARCH_NO_COPY = 0,
  HC_SEARCH_FOUND = 1,
  HC_SEARCH_BUDGET_EXHAUSTED = 2,
} HcSearch;

/**
 * Opaque hypergraph handle.
 */
typedef struct HcHypergraph HcHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a construction. `k` is ignored for H2 and Hf.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum HcStatus hc_build(enum HcFamily family, size_t k, size_t n, struct HcHypergraph **out);

/**
 * Parses and validates hypergraph JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for a write.
 */
enum HcStatus hc_from_json(const char *json, struct HcHypergraph **out);

/**
 * Serializes a hypergraph; free the result with [`hc_string_free`].
 *
 * # Safety
 * `h` must come from this library; `out` must be valid for a write.
 */
enum HcStatus hc_to_json(const struct HcHypergraph *h, char **out);

/**
 * Releases a handle. Null is a no-op.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void hc_free(struct HcHypergraph *h);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hc_string_free(char *s);

/**
 * Vertex count, edge count and uniformity. Any out pointer may be null.
 *
 * # Safety
 * `h` must come from this library; non-null outs must be writable.
 */
enum HcStatus hc_counts(const struct HcHypergraph *h,
                        size_t *num_vertices,
                        size_t *num_edges,
                        size_t *uniformity);

/**
 * Exact independence number; fails with `CeilingExceeded` above `ceiling`
 * vertices.
 *
 * # Safety
 * `h` must come from this library; `out` must be writable.
 */
enum HcStatus hc_alpha(const struct HcHypergraph *h, size_t ceiling, uint64_t *out);

/**
 * Searches for a pattern given in text form (`k4minus`, `tk:3`, `path:4`, ...).
 * `budget == 0` means unbounded. When `witness_json` is non-null it receives
 * the witness JSON on `Found` and null otherwise.
 *
 * # Safety
 * `h` must come from this library, `pattern` must be NUL-terminated, and
 * `out` plus a non-null `witness_json` must be writable.
 */
enum HcStatus hc_contains_pattern(const struct HcHypergraph *h,
                                  const char *pattern,
                                  uint64_t budget,
                                  enum HcSearch *out,
                                  char **witness_json);

/**
 * Runs a construction's claim suite and returns the report JSON. With
 * `timing == false` the report carries no elapsed times and is
 * byte-for-byte reproducible.
 *
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_report_json(enum HcFamily family,
                             size_t k,
                             size_t n,
                             uint64_t seed,
                             bool timing,
                             char **out);

/**
 * Message for the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next call on the same thread.
 */
const char *hc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERCERT_H */
