#ifndef BOTTFORGE_H
#define BOTTFORGE_H

/* Generated with cbindgen:0.27.0 */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BfStatus {
  BF_STATUS_OK = 0,
  BF_STATUS_NULL_POINTER = 1,
  BF_STATUS_INVALID_ARGUMENT = 2,
  BF_STATUS_UNSUPPORTED_TYPE = 3,
  /**
   * The computation finished but its Euler-characteristic check failed.
   */
  BF_STATUS_CHECK_FAILED = 4,
  BF_STATUS_PANIC = 5,
} BfStatus;

/**
 * Opaque root system handle.
 */
typedef struct BfRootSystem BfRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the root system of type `series` (one of `ABCDEFG`) and `rank`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum BfStatus bf_root_system_new(char series, uint32_t rank, struct BfRootSystem **out);

/**
 * # Safety
 * `rs` must be null or a handle from `bf_root_system_new` not yet freed.
 */
void bf_root_system_free(struct BfRootSystem *rs);

/**
 * Rank, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
uint32_t bf_root_system_rank(const struct BfRootSystem *rs);

/**
 * # Safety
 * `rs` must be null or a live handle.
 */
uint32_t bf_root_system_num_positive_roots(const struct BfRootSystem *rs);

/**
 * Line-bundle cohomology of `lambda` (fundamental-weight coordinates).
 *
 * On success `*degree_out` is the unique nonzero degree, or -1 when the
 * cohomology vanishes; in the former case `highest_weight_out[0..rank]`
 * receives the highest weight.
 *
 * # Safety
 * `lambda` must point to `len` integers; `highest_weight_out` to `rank`
 * writable integers; `degree_out` to one writable integer.
 */
enum BfStatus bf_bott(const struct BfRootSystem *rs,
                      const int64_t *lambda,
                      size_t len,
                      int32_t *degree_out,
                      int64_t *highest_weight_out);

/**
 * Dimension of `V(mu)` as a decimal string.
 *
 * # Safety
 * `mu` must point to `len` integers; `out` to writable storage for one pointer.
 */
enum BfStatus bf_weyl_dimension(const struct BfRootSystem *rs,
                                const int64_t *mu,
                                size_t len,
                                char **out);

/**
 * JSON document (schema 1) for `H^*(M_{alpha,r}(lambda))`, identical to the
 * command-line `demazure --format json` output in compact form.
 *
 * Returns `BF_STATUS_CHECK_FAILED` with the document still written if the
 * Euler-characteristic check fails.
 *
 * # Safety
 * `lambda` must point to `len` integers; `out` to writable storage for one pointer.
 */
enum BfStatus bf_demazure_json(const struct BfRootSystem *rs,
                               uint32_t alpha,
                               uint32_t r,
                               const int64_t *lambda,
                               size_t len,
                               char **out);

/**
 * JSON document (schema 1) for the line-bundle cohomology of `lambda`.
 *
 * # Safety
 * `lambda` must point to `len` integers; `out` to writable storage for one pointer.
 */
enum BfStatus bf_bott_json(const struct BfRootSystem *rs,
                           const int64_t *lambda,
                           size_t len,
                           char **out);

/**
 * Runs the Euler-characteristic identity for one query.
 *
 * # Safety
 * `lambda` must point to `len` integers; `passed_out` to one writable bool.
 */
enum BfStatus bf_euler_check(const struct BfRootSystem *rs,
                             uint32_t alpha,
                             uint32_t r,
                             const int64_t *lambda,
                             size_t len,
                             bool *passed_out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, freed at most once.
 */
void bf_string_free(char *s);

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *bf_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOTTFORGE_H */
