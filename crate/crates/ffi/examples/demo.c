/* Walks the C interface end to end: parse, inspect, count, enumerate,
 * block-matrix round trip, Fibonacci. Returns nonzero on the first
 * unexpected status.
 *
 * Build against the static library:
 *   cc examples/demo.c -Iinclude ../../target/debug/liblexmat_ffi.a \
 *      -lpthread -ldl -lm -o demo
 */

#include <stdio.h>

#include "lexmat.h"

static int fail(const char *what, LexmatStatus status) {
    fprintf(stderr, "%s: %s\n", what, lexmat_status_message(status));
    return 1;
}

int main(void) {
    printf("lexmat %s\n", lexmat_version());

    LexmatMatrix *m = NULL;
    LexmatStatus status = lexmat_matrix_parse("110\n101\n011", &m);
    if (status != LEXMAT_STATUS_OK) return fail("parse", status);
    char *text = NULL;
    if ((status = lexmat_matrix_to_text(m, &text)) != LEXMAT_STATUS_OK)
        return fail("to_text", status);
    printf("parsed %zux%zu nonincreasing=%d\n%s\n", lexmat_matrix_rows(m),
           lexmat_matrix_cols(m), lexmat_matrix_is_nonincreasing_lex(m), text);
    lexmat_string_free(text);
    lexmat_matrix_free(m);

    char *count = NULL;
    status = lexmat_count(LEXMAT_FAMILY_GAMMA, 5, 3,
                          LEXMAT_COUNT_METHOD_ENUMERATION, false, &count);
    if (status != LEXMAT_STATUS_OK) return fail("count", status);
    printf("gamma(5,3) = %s\n", count);
    lexmat_string_free(count);

    LexmatEnumerator *e = NULL;
    status = lexmat_enumerator_new(LEXMAT_FAMILY_DELTA, 4, 2, false, &e);
    if (status != LEXMAT_STATUS_OK) return fail("enumerator_new", status);
    size_t seen = 0;
    for (;;) {
        LexmatMatrix *next = NULL;
        status = lexmat_enumerator_next(e, &next);
        if (status == LEXMAT_STATUS_END_OF_STREAM) break;
        if (status != LEXMAT_STATUS_OK) return fail("enumerator_next", status);
        seen += 1;
        lexmat_matrix_free(next);
    }
    lexmat_enumerator_free(e);
    printf("delta(4,2) members = %zu\n", seen);

    size_t parts[] = {2, 3};
    if ((status = lexmat_delta2_build(parts, 2, &m)) != LEXMAT_STATUS_OK)
        return fail("delta2_build", status);
    if ((status = lexmat_matrix_to_text(m, &text)) != LEXMAT_STATUS_OK)
        return fail("to_text", status);
    printf("composition 2,3 block matrix:\n%s\n", text);
    lexmat_string_free(text);
    size_t recovered[8];
    size_t len = 0;
    status = lexmat_delta2_decompose(m, recovered, 8, &len);
    if (status != LEXMAT_STATUS_OK) return fail("decompose", status);
    printf("recovered parts:");
    for (size_t i = 0; i < len; i++) printf(" %zu", recovered[i]);
    printf("\n");
    lexmat_matrix_free(m);

    char *fib = NULL;
    if ((status = lexmat_fibonacci(90, &fib)) != LEXMAT_STATUS_OK)
        return fail("fibonacci", status);
    printf("f_90 = %s\n", fib);
    lexmat_string_free(fib);
    return 0;
}
