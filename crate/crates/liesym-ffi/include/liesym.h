/* C ABI for liesym: exact symmetry analysis of polynomial ODEs. */

#ifndef LIESYM_H
#define LIESYM_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>
/* Opaque handle to a parsed system file. */
typedef struct LiesymSystem LiesymSystem;

/*
 Status of an FFI call; non-OK calls leave a message in
 `liesym_last_error`.
 */
typedef enum LiesymStatus {
  /*
   Success; for check commands, the check passed.
   */
  LIESYM_STATUS_OK = 0,
  /*
   Well-formed negative result (failed check, no certificate in bound).
   */
  LIESYM_STATUS_NEGATIVE_RESULT = 1,
  /*
   System text failed to parse; see `liesym_last_error`.
   */
  LIESYM_STATUS_PARSE_ERROR = 2,
  /*
   Malformed command line or precondition violation.
   */
  LIESYM_STATUS_USAGE_ERROR = 3,
  /*
   A required pointer argument was null.
   */
  LIESYM_STATUS_NULL_POINTER = 4,
  /*
   Input was not valid UTF-8.
   */
  LIESYM_STATUS_INVALID_UTF8 = 5,
} LiesymStatus;

/*
 Message for the most recent failing call on this thread. Borrowed;
 valid until the next FFI call on the same thread. Never null.
 */
const char *liesym_last_error(void);

/*
 Library version as a static string; do not free.
 */
const char *liesym_version(void);

/*
 Parses system text (same grammar as the CLI `--system` file) into a
 handle written to `out`. On failure `out` is untouched and the
 positioned message is in `liesym_last_error`.

 # Safety
 `text` must be a valid NUL-terminated string; `out` must be a valid
 pointer to writable memory.
 */
enum LiesymStatus liesym_system_parse(const char *text, LiesymSystem **out);

/*
 Releases a system handle. Null is a no-op.

 # Safety
 `sys` must be null or a pointer returned by `liesym_system_parse` that
 has not been freed yet.
 */
void liesym_system_free(LiesymSystem *sys);

/*
 Renders the system back in canonical text form. Caller frees with
 `liesym_string_free`.

 # Safety
 `sys` must be a live handle from `liesym_system_parse`.
 */
char *liesym_system_render(const LiesymSystem *sys);

/*
 Runs one command line (e.g. `"intfactor f h"` or
 `"toral-gens 2,-2,3,-3 --max-deg 5"`) against an optional system
 handle; commands taking only inline weights accept a null `sys`.
 On Ok/NegativeResult the JSON report is written to `out_json` (caller
 frees with `liesym_string_free`).

 # Safety
 `command_line` must be a valid NUL-terminated string; `sys` must be
 null or a live handle; `out_json` must be valid writable memory.
 */
enum LiesymStatus liesym_run_json(const LiesymSystem *sys,
                                  const char *command_line,
                                  char **out_json);

/*
 Frees a string returned by this library. Null is a no-op.

 # Safety
 `s` must be null or a string returned by this library that has not
 been freed yet.
 */
void liesym_string_free(char *s);

#endif  /* LIESYM_H */
