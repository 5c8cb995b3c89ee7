#ifndef CATALAN_H
#define CATALAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  CATALAN_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CATALAN_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  CATALAN_STATUS_INVALID_UTF8 = 2,
  /**
   * The input text does not parse or violates its family's invariants.
   */
  CATALAN_STATUS_MALFORMED_INPUT = 3,
  /**
   * A valid sequence lies outside a partial codec's image.
   */
  CATALAN_STATUS_DOMAIN_ERROR = 4,
  /**
   * An index or size is outside the supported range.
   */
  CATALAN_STATUS_OUT_OF_RANGE = 5,
  /**
   * The library panicked; this is a bug.
   */
  CATALAN_STATUS_INTERNAL = 6,
} CatalanStatus;

/**
 * Formula used by [`catalan_count`].
 */
typedef enum {
  CATALAN_METHOD_CLOSED = 0,
  CATALAN_METHOD_CONVOLUTION = 1,
  CATALAN_METHOD_LINEAR = 2,
  CATALAN_METHOD_SERIES = 3,
} CatalanMethod;

/**
 * Lexicographic iterator over the sequences of one semilength.
 */
typedef struct CatalanEnumerator CatalanEnumerator;

/**
 * A validated Catalan sequence.
 */
typedef struct CatalanSequence CatalanSequence;

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *catalan_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void catalan_string_free(char *s);

/**
 * Parses and validates a `'0'`/`'1'` string.
 *
 * # Safety
 * `bits` must be a NUL-terminated string and `out` a writable pointer.
 */
CatalanStatus catalan_sequence_parse(const char *bits, CatalanSequence **out);

/**
 * # Safety
 * `s` must be null or a handle from this library that has not been freed.
 */
void catalan_sequence_free(CatalanSequence *s);

/**
 * Half the length of the sequence; 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t catalan_sequence_semilength(const CatalanSequence *s);

/**
 * # Safety
 * `s` must be a live handle and `out` a writable pointer.
 */
CatalanStatus catalan_sequence_to_string(const CatalanSequence *s, char **out);

/**
 * Lexicographic rank as a decimal string.
 *
 * # Safety
 * `s` must be a live handle and `out` a writable pointer.
 */
CatalanStatus catalan_sequence_rank(const CatalanSequence *s, char **out);

/**
 * Sequence of semilength `n` at the decimal rank `index`.
 *
 * # Safety
 * `index` must be a NUL-terminated string and `out` a writable pointer.
 */
CatalanStatus catalan_sequence_unrank(size_t n, const char *index, CatalanSequence **out);

/**
 * Uniformly random sequence of semilength `n`, deterministic in `seed`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
CatalanStatus catalan_sequence_random(size_t n, uint64_t seed, CatalanSequence **out);

/**
 * `C_n` as a decimal string.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
CatalanStatus catalan_count(size_t n, CatalanMethod method, char **out);

/**
 * Encodes `text`, written in `family`'s text form, into a sequence.
 *
 * # Safety
 * `family` and `text` must be NUL-terminated strings and `out` a writable pointer.
 */
CatalanStatus catalan_encode(const char *family, const char *text, CatalanSequence **out);

/**
 * Decodes a sequence into `family`'s text form.
 *
 * # Safety
 * `s` must be a live handle, `family` a NUL-terminated string and `out` a writable pointer.
 */
CatalanStatus catalan_decode(const CatalanSequence *s, const char *family, char **out);

/**
 * Converts `text` from family `from` to family `to`.
 *
 * # Safety
 * All string arguments must be NUL-terminated and `out` a writable pointer.
 */
CatalanStatus catalan_transcode(const char *from, const char *to, const char *text, char **out);

/**
 * Starts a lexicographic enumeration of semilength `n`; fails above the enumeration cap.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
CatalanStatus catalan_enumerator_new(size_t n, CatalanEnumerator **out);

/**
 * Writes the next sequence to `out`, or null once the enumeration is exhausted.
 *
 * # Safety
 * `e` must be a live enumerator and `out` a writable pointer.
 */
CatalanStatus catalan_enumerator_next(CatalanEnumerator *e, CatalanSequence **out);

/**
 * # Safety
 * `e` must be null or an enumerator from this library that has not been freed.
 */
void catalan_enumerator_free(CatalanEnumerator *e);

#endif  /* CATALAN_H */
