/* C interface to the locmult local multiplicity library. */
#ifndef LOCMULT_LOCMULT_H
#define LOCMULT_LOCMULT_H

#include <stddef.h>

#if defined(LOCMULT_BUILDING_LIBRARY)
#define LM_API __attribute__((visibility("default")))
#else
#define LM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit statuses. */
typedef enum lm_status {
  LM_OK = 0,
  LM_ERR_MATH = 1,     /* precondition failed or an asserted check did not hold */
  LM_ERR_PARSE = 2,    /* parse or usage error */
  LM_ERR_BUDGET = 3,   /* resource cap hit or difference window did not stabilize */
  LM_ERR_INTERNAL = 4  /* certificate failure or other bug */
} lm_status;

typedef struct lm_document lm_document;

typedef struct lm_options {
  unsigned max_degree; /* S-pair degree cap, default 40 */
  unsigned max_n;      /* Hilbert-Samuel sample range, default 24 */
  unsigned window;     /* stabilization window, default 3 */
  int json;            /* nonzero: results as JSON */
  int equidim;         /* report: assert both modules equidimensional */
  int timing;          /* include wall time in results */
  const char* order;   /* gb: "grevlex" (default) or "lex" */
} lm_options;

LM_API void lm_options_init(lm_options* opts);

/* Parses a source document.  On failure *doc is NULL and *error receives a
   "line:column: message" string to release with lm_string_free. */
LM_API lm_status lm_document_parse(const char* text, size_t length, lm_document** doc, char** error);
LM_API void lm_document_free(lm_document* doc);

/* Each command writes its output (or an error message) to *out, to be
   released with lm_string_free. */
LM_API lm_status lm_cmd_gb(const lm_document* doc, const char* ideal, const lm_options* opts, char** out);
LM_API lm_status lm_cmd_mult(const lm_document* doc, const char* ideal, const lm_options* opts, char** out);
LM_API lm_status lm_cmd_tangent(const lm_document* doc, const char* ideal, const lm_options* opts, char** out);
LM_API lm_status lm_cmd_chi(const lm_document* doc, const char* i, const char* j, const lm_options* opts,
                            char** out);
LM_API lm_status lm_cmd_report(const lm_document* doc, const char* i, const char* j, const lm_options* opts,
                               char** out);
LM_API lm_status lm_cmd_format(const lm_document* doc, const lm_options* opts, char** out);

/* Any command by name: gb, mult, tangent, hs, chi, report, samuel, psi,
   dimcut, divisor, additivity, format. */
LM_API lm_status lm_cmd_run(const lm_document* doc, const char* command, const char* const* args, size_t nargs,
                            const lm_options* opts, char** out);

/* Runs the built-in fixture corpus.  suite may be NULL (all fixtures);
   ledger, when non-NULL, receives one JSON line per fixture. */
LM_API lm_status lm_cmd_corpus(const char* suite, const char* ledger, const lm_options* opts, char** out);

LM_API void lm_string_free(char* s);
LM_API const char* lm_version(void);
LM_API const char* lm_status_name(lm_status status);

#ifdef __cplusplus
}
#endif

#endif /* LOCMULT_LOCMULT_H */
