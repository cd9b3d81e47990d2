/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the sysmod library: an opaque session owning a world
 * (declarations and allocations) and the current store snapshot.
 *
 * Every call returns a status code; SYSMOD_OK is 0. On failure,
 * sysmod_last_error() gives the human-readable diagnostic. Strings
 * returned as `const char*` are owned by the session and stay valid until
 * the next call on that session; strings returned as `char*` are
 * malloc'd and must be released with sysmod_string_free().
 */
#ifndef SYSMOD_SYSMOD_H
#define SYSMOD_SYSMOD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sysmod_session sysmod_session;

typedef enum sysmod_status {
  SYSMOD_OK = 0,

  /* infrastructure */
  SYSMOD_ERR_USAGE = 1,
  SYSMOD_ERR_INTERNAL = 2,
  SYSMOD_ERR_SYNTAX = 3,

  /* universe / constructors */
  SYSMOD_ERR_MALFORMED_TYPE = 10,
  SYSMOD_ERR_DUPLICATE_FIELD = 11,
  SYSMOD_ERR_ARITY_MISMATCH = 12,
  SYSMOD_ERR_FIELD_SET_MISMATCH = 13,
  SYSMOD_ERR_NO_SUCH_FIELD = 14,
  SYSMOD_ERR_NIL_DEREFERENCE = 15,
  SYSMOD_ERR_UNKNOWN_OID = 16,
  SYSMOD_ERR_TYPE_MISMATCH = 17,

  /* classes */
  SYSMOD_ERR_DUPLICATE_CLASS = 20,
  SYSMOD_ERR_UNKNOWN_CLASS = 21,
  SYSMOD_ERR_UNKNOWN_SUPER = 22,
  SYSMOD_ERR_INHERITANCE_CYCLE = 23,
  SYSMOD_ERR_NAME_CONFLICT = 24,
  SYSMOD_ERR_STRICT_REDEFINITION = 25,
  SYSMOD_ERR_MISSING_INIT = 26,
  SYSMOD_ERR_CARRIER_VIOLATION = 27,
  SYSMOD_ERR_DUPLICATE_STATIC = 28,

  /* data store */
  SYSMOD_ERR_UNMAPPED_LOCATION = 30,
  SYSMOD_ERR_NO_SUCH_ATTR = 31,
  SYSMOD_ERR_IMMUTABLE_ATTR = 32,
  SYSMOD_ERR_DUPLICATE_OBJECT = 33,
  SYSMOD_ERR_WRONG_LOCATION_SET = 34,

  /* associations */
  SYSMOD_ERR_DUPLICATE_ASSOC = 40,
  SYSMOD_ERR_STRATEGY_SHAPE_MISMATCH = 41,
  SYSMOD_ERR_UNKNOWN_ASSOC = 42,
  SYSMOD_ERR_ASSOC_INCONSISTENT = 43,
  SYSMOD_ERR_STRATEGY_MISMATCH = 44,
  SYSMOD_ERR_QUALIFIER_NOT_UNIQUE = 45,
  SYSMOD_ERR_MULTIPLICITY_VIOLATION = 46,

  /* scripts */
  SYSMOD_ERR_UNBOUND_VARIABLE = 50,
  SYSMOD_ERR_ASSERTION_FAILED = 51
} sysmod_status;

/* Creates a session with an empty world and store. strict_inheritance
 * nonzero rejects attribute redeclaration in subclasses. */
sysmod_session* sysmod_session_new(int strict_inheritance);
void sysmod_session_free(sysmod_session* session);

/* Parses model text and replays its declarations into the session. */
sysmod_status sysmod_load_model(sysmod_session* session, const char* text);

/* Parses and executes a script against the session's world and store.
 * Violations found by `check` statements do not fail the call; the count
 * is written to violations_out when non-NULL. */
sysmod_status sysmod_run_script(sysmod_session* session, const char* text,
                                int* violations_out);

/* Runs the store well-formedness checker (including association
 * consistency). The violation count goes to violations_out when non-NULL;
 * the per-violation report is available via sysmod_check_report(). */
sysmod_status sysmod_check_store(sysmod_session* session, int* violations_out);

/* Diagnostic of the most recent failing call; "" if none. */
const char* sysmod_last_error(const sysmod_session* session);

/* Transcript accumulated by sysmod_run_script calls, newline separated. */
const char* sysmod_transcript(const sysmod_session* session);

/* One line per declared entity plus capsule-leak warnings. */
const char* sysmod_model_summary(sysmod_session* session);

/* Report of the most recent sysmod_check_store, newline separated. */
const char* sysmod_check_report(const sysmod_session* session);

/* The current snapshot document. Free with sysmod_string_free(). */
char* sysmod_dump_snapshot(sysmod_session* session);

void sysmod_string_free(char* text);

const char* sysmod_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYSMOD_SYSMOD_H */
