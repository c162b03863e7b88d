#ifndef MCG_TORSION_H
#define MCG_TORSION_H

/* Generated by cbindgen; edit the Rust sources instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum McgStatus {
  MCG_STATUS_OK = 0,
  MCG_STATUS_NULL_POINTER = 1,
  MCG_STATUS_INVALID_ARGUMENT = 2,
  MCG_STATUS_PARSE_ERROR = 3,
  MCG_STATUS_UNKNOWN_NAME = 4,
  MCG_STATUS_DIMENSION_MISMATCH = 5,
  MCG_STATUS_OVERFLOW = 6,
  MCG_STATUS_INFINITE_GROUP = 7,
  MCG_STATUS_INVALID_UTF8 = 8,
  MCG_STATUS_PANIC = 9,
} McgStatus;

typedef struct McgMatrix McgMatrix;

/**
 * A curve system together with its homology representation.
 */
typedef struct McgSystem McgSystem;

/**
 * Verdict for `Γ*_{g,r}`. Only the first `generator_order_count` entries of
 * `generator_orders` are meaningful.
 */
typedef struct McgVerdict {
  bool generated_by_torsion;
  uint64_t torsion_subgroup_index;
  size_t generator_order_count;
  uint64_t generator_orders[4];
} McgVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *mcg_last_error_message(void);

/**
 * Builds a named curve system (`torus`, `torus-arc`, `chain:g=G`, ...).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum McgStatus mcg_system_from_name(const char *name, struct McgSystem **out);

/**
 * # Safety
 * `system` must come from [`mcg_system_from_name`] and not be freed twice.
 */
void mcg_system_free(struct McgSystem *system);

/**
 * Homology matrix of a twist word.
 *
 * # Safety
 * `system` must be a live handle, `word` a NUL-terminated string and `out`
 * a valid pointer.
 */
enum McgStatus mcg_word_matrix(const struct McgSystem *system,
                               const char *word,
                               struct McgMatrix **out);

/**
 * # Safety
 * `matrix` must be a live handle; `rows` and `cols` valid pointers.
 */
enum McgStatus mcg_matrix_dims(const struct McgMatrix *matrix, size_t *rows, size_t *cols);

/**
 * Entry `(row, col)`, 0-based. Fails with `Overflow` if it does not fit.
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer.
 */
enum McgStatus mcg_matrix_entry(const struct McgMatrix *matrix,
                                size_t row,
                                size_t col,
                                int64_t *out);

/**
 * Rows separated by newlines, entries by spaces. Free with
 * [`mcg_string_free`]. Returns null on failure.
 *
 * # Safety
 * `matrix` must be a live handle.
 */
char *mcg_matrix_to_string(const struct McgMatrix *matrix);

/**
 * # Safety
 * `matrix` must come from this library and not be freed twice.
 */
void mcg_matrix_free(struct McgMatrix *matrix);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void mcg_string_free(char *s);

/**
 * Multiplicative order of a square matrix; `0` means infinite.
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer.
 */
enum McgStatus mcg_matrix_order(const struct McgMatrix *matrix, uint64_t *out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum McgStatus mcg_theorem_verdict(uint32_t g, uint32_t r, struct McgVerdict *out);

/**
 * Whether a built-in symmetry (`tau5`, `tau2(3)`, ...) can realize `r`
 * boundary components.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum McgStatus mcg_realizable(const char *spec, uint64_t r, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCG_TORSION_H */
