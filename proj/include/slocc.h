#ifndef SLOCC_H
#define SLOCC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SLOCC_API __declspec(dllexport)
#else
#define SLOCC_API __attribute__((visibility("default")))
#endif

/* Opaque exact 2xNxN state. */
typedef struct slocc_state slocc_state;

typedef enum slocc_status {
  SLOCC_OK = 0,
  SLOCC_NOT_TRUE_ENTANGLED = 1,
  SLOCC_PARSE_ERROR = 2,
  SLOCC_ILL_CONDITIONED = 3,
  SLOCC_INDETERMINATE = 4,
  SLOCC_SINGULAR = 5,
  SLOCC_INVALID_ARGUMENT = 6,
  SLOCC_INTERNAL = 7,
  SLOCC_FUZZ_FAILURES = 8
} slocc_status;

typedef enum slocc_verdict {
  SLOCC_EQUIVALENT = 0,
  SLOCC_INEQUIVALENT = 1,
  SLOCC_VERDICT_INDETERMINATE = 2
} slocc_verdict;

/* Strings returned through char** are owned by the caller; release them
   with slocc_string_free. On failure the message of the last error of the
   calling thread is available from slocc_last_error. A tol <= 0 selects
   the default guard band. */

SLOCC_API slocc_status slocc_state_from_json(const char* json, slocc_state** out);
SLOCC_API slocc_status slocc_state_from_file(const char* path, slocc_state** out);
SLOCC_API void slocc_state_free(slocc_state* state);
SLOCC_API size_t slocc_state_dim(const slocc_state* state);
SLOCC_API slocc_status slocc_state_to_json(const slocc_state* state, char** out);

/* Report JSON (descriptor, canonical pair, witness, warnings), or a plain
   text table when as_table is nonzero. */
SLOCC_API slocc_status slocc_classify(const slocc_state* state, double tol, int as_table, char** out);
SLOCC_API slocc_status slocc_descriptor(const slocc_state* state, double tol, char** out);
SLOCC_API slocc_status slocc_canonicalize(const slocc_state* state, double tol, char** canonical_json,
                                          char** witness_json);
/* witness_json may be NULL; it receives NULL when no witness exists. */
SLOCC_API slocc_status slocc_equivalent(const slocc_state* a, const slocc_state* b, double tol,
                                        slocc_verdict* verdict, char** witness_json);
SLOCC_API slocc_status slocc_enumerate(size_t n, int as_markdown, char** out);
/* Returns SLOCC_FUZZ_FAILURES when any trial failed; the summary is still set. */
SLOCC_API slocc_status slocc_fuzz(size_t n, size_t trials, uint64_t seed, const char* dump_dir, double tol,
                                  char** summary_json);
/* Re-runs the fuzz checks on a dumped state and operator. */
SLOCC_API slocc_status slocc_fuzz_replay(const char* state_path, const char* ilo_path, double tol, char** summary_json);
SLOCC_API slocc_status slocc_grid(const slocc_state* state, char** out);

SLOCC_API void slocc_string_free(char* s);
SLOCC_API const char* slocc_last_error(void);
SLOCC_API const char* slocc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SLOCC_H */
