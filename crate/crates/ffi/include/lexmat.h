/* C interface to the lexmat sorted binary matrix toolkit. */

#ifndef LEXMAT_H
#define LEXMAT_H

/* Generated by cbindgen from crates/ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this interface.
 */
typedef enum LexmatStatus {
  /**
   * The call succeeded.
   */
  LEXMAT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  LEXMAT_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  LEXMAT_STATUS_INVALID_UTF8 = 2,
  /**
   * Matrix text could not be parsed.
   */
  LEXMAT_STATUS_PARSE_ERROR = 3,
  /**
   * An argument was outside the domain of the operation.
   */
  LEXMAT_STATUS_INVALID_ARGUMENT = 4,
  /**
   * A size argument exceeded the supported range.
   */
  LEXMAT_STATUS_OUT_OF_RANGE = 5,
  /**
   * The requested search is too large to run.
   */
  LEXMAT_STATUS_TOO_LARGE = 6,
  /**
   * The matrix is not a block matrix of the k = 2 nonincreasing family.
   */
  LEXMAT_STATUS_NOT_DELTA2 = 7,
  /**
   * The enumerator is exhausted.
   */
  LEXMAT_STATUS_END_OF_STREAM = 8,
  /**
   * An output buffer was too small; consult the size query functions.
   */
  LEXMAT_STATUS_BUFFER_TOO_SMALL = 9,
} LexmatStatus;

/**
 * Which matrix family an operation refers to.
 */
typedef enum LexmatFamily {
  /**
   * Exactly k ones per row and column, no ordering constraint.
   */
  LEXMAT_FAMILY_LAMBDA = 0,
  /**
   * Rows and columns nondecreasing in lexicographic order.
   */
  LEXMAT_FAMILY_GAMMA = 1,
  /**
   * Rows and columns nonincreasing in lexicographic order.
   */
  LEXMAT_FAMILY_DELTA = 2,
} LexmatFamily;

/**
 * How a count is computed.
 */
typedef enum LexmatCountMethod {
  /**
   * Backtracking enumeration; works for every family.
   */
  LEXMAT_COUNT_METHOD_ENUMERATION = 0,
  /**
   * Fibonacci recurrence; delta with k = 2 or gamma with k = n - 2.
   */
  LEXMAT_COUNT_METHOD_STRUCTURE = 1,
  /**
   * Closed summation formula; lambda with k = 2 and n at most 30.
   */
  LEXMAT_COUNT_METHOD_FORMULA = 2,
} LexmatCountMethod;

/**
 * A stream of matrices from one family, yielded in ascending row-code
 * order by [`lexmat_enumerator_next`].
 */
typedef struct LexmatEnumerator LexmatEnumerator;

/**
 * An immutable binary matrix.
 */
typedef struct LexmatMatrix LexmatMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the library as a static string; do not free.
 */
const char *lexmat_version(void);

/**
 * Static description of a status code; do not free.
 */
const char *lexmat_status_message(enum LexmatStatus status);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void lexmat_string_free(char *s);

/**
 * Parses one matrix from text: lines of '0'/'1' characters, equal
 * length, at most 64 rows and 64 columns. Writes a new handle to `out`.
 */
enum LexmatStatus lexmat_matrix_parse(const char *text, struct LexmatMatrix **out);

/**
 * Builds a matrix from packed row codes: bit (n_cols - 1 - j) of
 * `codes[i]` is entry (i, j), so the first column is most significant.
 */
enum LexmatStatus lexmat_matrix_from_codes(const uint64_t *codes,
                                           size_t n_rows,
                                           size_t n_cols,
                                           struct LexmatMatrix **out);

/**
 * Releases a matrix handle. Null is ignored.
 */
void lexmat_matrix_free(struct LexmatMatrix *matrix);

/**
 * Number of rows, or 0 if the handle is null.
 */
size_t lexmat_matrix_rows(const struct LexmatMatrix *matrix);

/**
 * Number of columns, or 0 if the handle is null.
 */
size_t lexmat_matrix_cols(const struct LexmatMatrix *matrix);

/**
 * Entry (i, j) as 0 or 1, or -1 if the handle is null or the index is
 * out of range.
 */
int lexmat_matrix_get(const struct LexmatMatrix *matrix, size_t i, size_t j);

/**
 * Renders the matrix as NUL terminated text, one '0'/'1' line per row.
 */
enum LexmatStatus lexmat_matrix_to_text(const struct LexmatMatrix *matrix, char **out);

/**
 * Copies the row codes x_1..x_n into `buf`, which must hold at least
 * `lexmat_matrix_rows` values.
 */
enum LexmatStatus lexmat_matrix_row_codes(const struct LexmatMatrix *matrix,
                                          uint64_t *buf,
                                          size_t buf_len);

/**
 * Copies the column codes y_1..y_m into `buf`, which must hold at least
 * `lexmat_matrix_cols` values.
 */
enum LexmatStatus lexmat_matrix_col_codes(const struct LexmatMatrix *matrix,
                                          uint64_t *buf,
                                          size_t buf_len);

/**
 * Writes the entrywise complement as a new handle.
 */
enum LexmatStatus lexmat_matrix_complement(const struct LexmatMatrix *matrix,
                                           struct LexmatMatrix **out);

/**
 * Writes the transpose as a new handle.
 */
enum LexmatStatus lexmat_matrix_transpose(const struct LexmatMatrix *matrix,
                                          struct LexmatMatrix **out);

/**
 * Writes 1 to `out` when the matrix is square with exactly k ones in
 * every row and column. Non-square matrices are rejected.
 */
enum LexmatStatus lexmat_matrix_is_lambda(const struct LexmatMatrix *matrix, size_t k, bool *out);

/**
 * 1 when rows and columns are nondecreasing in lexicographic order,
 * 0 otherwise, -1 if the handle is null.
 */
int lexmat_matrix_is_nondecreasing_lex(const struct LexmatMatrix *matrix);

/**
 * 1 when rows and columns are nonincreasing in lexicographic order,
 * 0 otherwise, -1 if the handle is null.
 */
int lexmat_matrix_is_nonincreasing_lex(const struct LexmatMatrix *matrix);

/**
 * Counts the family members and writes the count as a decimal string.
 * The structure method needs delta k = 2 or gamma k = n - 2; the
 * formula method needs lambda k = 2 with n at most 30.
 */
enum LexmatStatus lexmat_count(enum LexmatFamily family,
                               size_t n,
                               size_t k,
                               enum LexmatCountMethod method,
                               bool parallel,
                               char **out);

/**
 * Opens an enumerator over one family. With `parallel` the listing is
 * materialized eagerly before the first `next`; the order is identical.
 */
enum LexmatStatus lexmat_enumerator_new(enum LexmatFamily family,
                                        size_t n,
                                        size_t k,
                                        bool parallel,
                                        struct LexmatEnumerator **out);

/**
 * Writes the next matrix as a new handle, or returns
 * `LEXMAT_STATUS_END_OF_STREAM` when the family is exhausted.
 */
enum LexmatStatus lexmat_enumerator_next(struct LexmatEnumerator *enumerator,
                                         struct LexmatMatrix **out);

/**
 * Releases an enumerator handle. Null is ignored.
 */
void lexmat_enumerator_free(struct LexmatEnumerator *enumerator);

/**
 * Builds the k = 2 nonincreasing block matrix of a composition: `parts`
 * holds `len` integers, each at least 2, summing to at most 64.
 */
enum LexmatStatus lexmat_delta2_build(const size_t *parts, size_t len, struct LexmatMatrix **out);

/**
 * Recovers the composition behind a k = 2 nonincreasing block matrix.
 * `buf` receives the parts; `buf_len` must be at least rows / 2, and
 * `out_len` receives the number of parts written.
 */
enum LexmatStatus lexmat_delta2_decompose(const struct LexmatMatrix *matrix,
                                          size_t *buf,
                                          size_t buf_len,
                                          size_t *out_len);

/**
 * Writes Fibonacci number f_i (f_0 = f_1 = 1) as a decimal string.
 * Indices above 100000 are rejected.
 */
enum LexmatStatus lexmat_fibonacci(size_t i, char **out);

/**
 * Largest supported matrix dimension.
 */
size_t lexmat_max_width(void);

/**
 * Largest n accepted by the lambda k = 2 formula method.
 */
size_t lexmat_formula_limit(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEXMAT_H */
