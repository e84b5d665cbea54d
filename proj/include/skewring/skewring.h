#ifndef SKEWRING_SKEWRING_H
#define SKEWRING_SKEWRING_H

/*
 * C interface to the skewring library.
 *
 * Every function returns an sr_status. On failure the message is available
 * from sr_last_error() until the next call on the same thread. Handles are
 * opaque and owned by the caller; strings returned through char** are
 * released with sr_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define SR_API __attribute__((visibility("default")))
#else
#define SR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_ERR_INVALID_ARGUMENT = 1,
  SR_ERR_PARSE = 2,
  SR_ERR_AXIOM = 3,
  SR_ERR_SIZE_CAP = 4,
  SR_ERR_BUDGET = 5,
  SR_ERR_MISMATCH = 6,
  SR_ERR_IO = 7,
  SR_ERR_INTERNAL = 8
} sr_status;

/* A finite ring with an endomorphism. */
typedef struct sr_structure sr_structure;
/* The outcome of one property check, with its witness. */
typedef struct sr_verdict sr_verdict;

typedef enum sr_envelope_kind {
  SR_ENVELOPE_NONE = 0, /* element-level properties */
  SR_ENVELOPE_DEGREE = 1,
  SR_ENVELOPE_WINDOW = 2,
  SR_ENVELOPE_TRUNCATION = 3
} sr_envelope_kind;

typedef struct sr_check_options {
  sr_envelope_kind envelope;
  uint32_t degree;    /* SR_ENVELOPE_DEGREE */
  uint32_t window[4]; /* SR_ENVELOPE_WINDOW: m, n, t, s */
  uint32_t order;     /* SR_ENVELOPE_TRUNCATION: coefficients per series */
  uint64_t tuple_budget; /* 0: library default */
  uint32_t threads;      /* 0: hardware concurrency */
} sr_check_options;

typedef enum sr_format { SR_FORMAT_TEXT = 0, SR_FORMAT_STRUCTURED = 1 } sr_format;

SR_API const char* sr_version(void);
SR_API const char* sr_last_error(void);
SR_API void sr_string_free(char* s);

/* Rings ------------------------------------------------------------------- */

/* Parses a ring document. size_cap 0 selects the default of 256. */
SR_API sr_status sr_structure_parse(const char* text, size_t size_cap, sr_structure** out);
SR_API sr_status sr_structure_load(const char* path, size_t size_cap, sr_structure** out);
SR_API void sr_structure_free(sr_structure* s);

SR_API sr_status sr_structure_size(const sr_structure* s, size_t* out);
SR_API sr_status sr_structure_orbit(const sr_structure* s, size_t* preperiod, size_t* period);
/* "size 4, unital, automorphism, orbit (0,2)" */
SR_API sr_status sr_structure_describe(const sr_structure* s, char** out);
/* Canonical table document. */
SR_API sr_status sr_structure_document(const sr_structure* s, char** out);

/* Checks ------------------------------------------------------------------ */

/* property: kebab-case name, e.g. "q-alpha-skew-armendariz". options may be
 * NULL for element-level properties. */
SR_API sr_status sr_check(const sr_structure* s, const char* property, const sr_check_options* options,
                   sr_verdict** out);
SR_API void sr_verdict_free(sr_verdict* v);
SR_API sr_status sr_verdict_holds(const sr_verdict* v, int* holds);
/* Text rendering or the verdict record. */
SR_API sr_status sr_verdict_render(const sr_verdict* v, sr_format format, char** out);

/* Replays a verdict record. *reproduced is 1 when the recorded outcome is
 * confirmed; report (may be NULL) receives a one-line explanation. */
SR_API sr_status sr_replay(const char* record_text, int* reproduced, char** report);

/* Corpus ------------------------------------------------------------------ */

/* Runs the corpus harness on the named entries (all when count is 0) at the
 * given degree. manifest_text NULL selects the built-in manifest. *passed is
 * 1 when no row fails; report receives the rendered table. */
SR_API sr_status sr_corpus_run(const char* manifest_text, const char* const* names, size_t count, uint32_t degree,
                        uint64_t tuple_budget, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif
