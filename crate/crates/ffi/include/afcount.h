/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef AFCOUNT_H
#define AFCOUNT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AfcFormat {
  AFC_FORMAT_APX = 0,
  AFC_FORMAT_TGF = 1,
} AfcFormat;

typedef enum AfcSemantics {
  AFC_SEMANTICS_CONFLICT_FREE = 0,
  AFC_SEMANTICS_ADMISSIBLE = 1,
  AFC_SEMANTICS_COMPLETE = 2,
  AFC_SEMANTICS_PREFERRED = 3,
  AFC_SEMANTICS_SEMI_STABLE = 4,
  AFC_SEMANTICS_STABLE = 5,
  AFC_SEMANTICS_STAGE = 6,
} AfcSemantics;

typedef enum AfcStatus {
  AFC_STATUS_OK = 0,
  AFC_STATUS_NULL_POINTER = 1,
  AFC_STATUS_INVALID_UTF8 = 2,
  AFC_STATUS_PARSE = 3,
  AFC_STATUS_UNKNOWN_ARGUMENT = 4,
  AFC_STATUS_USAGE = 5,
  AFC_STATUS_INTERNAL = 6,
  AFC_STATUS_ORACLE_MISMATCH = 7,
  AFC_STATUS_PANIC = 8,
} AfcStatus;

// Opaque framework handle.
typedef struct AfcFramework AfcFramework;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `text` into a new framework stored in `*out`.
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
enum AfcStatus afc_framework_parse(const char *text,
                                   enum AfcFormat format,
                                   struct AfcFramework **out);

// Releases a framework. Null is ignored.
//
// # Safety
// `fw` must come from [`afc_framework_parse`] and not be used afterwards.
void afc_framework_free(struct AfcFramework *fw);

// Number of arguments, 0 for null.
//
// # Safety
// `fw` must be null or a live handle.
size_t afc_framework_len(const struct AfcFramework *fw);

// Number of extensions, or of those containing `arg` when it is not null,
// as a decimal string in `*out`.
//
// # Safety
// Pointers must be valid; `arg` may be null.
enum AfcStatus afc_count(const struct AfcFramework *fw,
                         enum AfcSemantics sem,
                         const char *arg,
                         char **out);

// Number of distinct restrictions to the `n` names in `projection` of the
// extensions (containing `arg` when it is not null).
//
// # Safety
// `projection` must point to `n` valid strings; `arg` may be null.
enum AfcStatus afc_count_projected(const struct AfcFramework *fw,
                                   enum AfcSemantics sem,
                                   const char *arg,
                                   const char *const *projection,
                                   size_t n,
                                   char **out);

// Whether some extension contains `arg`.
//
// # Safety
// Pointers must be valid.
enum AfcStatus afc_credulous(const struct AfcFramework *fw,
                             enum AfcSemantics sem,
                             const char *arg,
                             bool *out);

// Whether every extension contains `arg` (true when there are none).
//
// # Safety
// Pointers must be valid.
enum AfcStatus afc_skeptical(const struct AfcFramework *fw,
                             enum AfcSemantics sem,
                             const char *arg,
                             bool *out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void afc_string_free(char *s);

// Message of the last failed call on this thread, or null. Valid until the
// next call on the same thread.
const char *afc_last_error(void);

// Library version, static storage.
const char *afc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFCOUNT_H */
