#include <stdio.h>
#include <string.h>

#include "catalan.h"

static int check(CatalanStatus status, CatalanStatus expected, const char *what) {
    if (status != expected) {
        fprintf(stderr, "%s: status %d: %s\n", what, (int)status, catalan_last_error_message());
        return 1;
    }
    return 0;
}

int main(void) {
    CatalanSequence *s = NULL;
    char *text = NULL;
    int failures = 0;

    failures += check(catalan_encode("tree", "((. (. .)) (. .))", &s), CATALAN_STATUS_OK, "encode");
    failures += check(catalan_decode(s, "chords", &text), CATALAN_STATUS_OK, "decode");
    if (text && strcmp(text, "1-8,2-7,3-4,5-6") != 0) {
        fprintf(stderr, "chords: %s\n", text);
        failures++;
    }
    printf("%s\n", text ? text : "(null)");
    catalan_string_free(text);
    catalan_sequence_free(s);

    failures += check(catalan_count(30, CATALAN_METHOD_SERIES, &text), CATALAN_STATUS_OK, "count");
    printf("%s\n", text ? text : "(null)");
    catalan_string_free(text);

    failures += check(catalan_sequence_parse("0110", &s), CATALAN_STATUS_MALFORMED_INPUT, "parse");
    return failures == 0 ? 0 : 1;
}
