#ifndef PPG_H
#define PPG_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Status codes; the nonzero ones match the command-line exit codes where
 * they overlap.
 */
typedef enum {
  PPG_STATUS_OK = 0,
  PPG_STATUS_OTHER = 1,
  PPG_STATUS_MALFORMED = 2,
  PPG_STATUS_BOUND_EXCEEDED = 3,
  PPG_STATUS_THEOREM_VIOLATION = 4,
  PPG_STATUS_NULL_ARGUMENT = 5,
  /**
   * `verify` ran but at least one check failed; the report is still returned.
   */
  PPG_STATUS_VERIFY_FAILED = 6,
  PPG_STATUS_PANIC = 7,
} PpgStatus;

/**
 * Opaque analysis handle.
 */
typedef struct PpgSession PpgSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Open a session for a group file path or `builtin:<name>`; `max_order`
 * 0 means the default bound.
 */
PpgStatus ppg_session_new(const char *group,
                          uint64_t prime,
                          uint64_t seed,
                          size_t max_order,
                          PpgSession **out);

/**
 * Open a session from the JSON text of a group file.
 */
PpgStatus ppg_session_from_json(const char *json,
                                uint64_t prime,
                                uint64_t seed,
                                size_t max_order,
                                PpgSession **out);

/**
 * Release a session; null is ignored.
 */
void ppg_session_free(PpgSession *s);

/**
 * Group order, or 0 for a null session.
 */
uint64_t ppg_session_group_order(const PpgSession *s);

/**
 * Degree of the splitting field over the prime field, or 0.
 */
uint32_t ppg_session_field_degree(const PpgSession *s);

/**
 * Number of blocks, or 0.
 */
size_t ppg_session_block_count(const PpgSession *s);

/**
 * Run `command` (pieces, generalized, points, multiposet, verify) with a
 * block selector (principal, all, or an index) and a format (json, dot,
 * table). On `Ok` and `VerifyFailed`, `*out` receives a string for
 * `ppg_string_free`.
 */
PpgStatus ppg_run(const PpgSession *s,
                  const char *command,
                  const char *block,
                  const char *format,
                  bool slow,
                  char **out);

/**
 * Release a string returned by `ppg_run`; null is ignored.
 */
void ppg_string_free(char *p);

/**
 * Message for the last failing call on this thread; empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *ppg_last_error(void);

const char *ppg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PPG_H */
