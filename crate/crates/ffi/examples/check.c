/* Decide primitivity of a quadratic from C.
 *
 *   cargo build --release -p gfquad-ffi
 *   cc check.c -I../include ../../../target/release/libgfquad_ffi.a -lm -lpthread -ldl
 *   ./a.out 11 "x^2+4x+2"
 */
#include <stdio.h>
#include <stdlib.h>

#include "gfquad.h"

int main(int argc, char **argv) {
    if (argc != 3) {
        fprintf(stderr, "usage: %s P POLY\n", argv[0]);
        return 2;
    }
    GfqField *field = NULL;
    if (gfq_field_new(strtoull(argv[1], NULL, 10), 1, NULL, NULL, &field) != GFQ_STATUS_OK) {
        fprintf(stderr, "error: %s\n", gfq_last_error());
        return 2;
    }
    bool primitive = false;
    char *verdict = NULL;
    GfqStatus status = gfq_test(field, argv[2], &primitive, &verdict);
    gfq_field_free(field);
    if (status != GFQ_STATUS_OK) {
        fprintf(stderr, "error: %s\n", gfq_last_error());
        return 2;
    }
    printf("%s\n", verdict);
    gfq_string_free(verdict);
    return primitive ? 0 : 1;
}
