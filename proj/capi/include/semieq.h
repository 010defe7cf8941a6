/* C interface to the semigroup equation toolkit.
 *
 * All functions return a semieq_status; SEMIEQ_OK means the call itself
 * succeeded (a command may still report a false verdict through its
 * exit_code out-parameter).  On failure, semieq_last_error() describes the
 * problem for the calling thread.  Strings returned through out-parameters
 * are owned by the caller and released with semieq_string_free().
 */
#ifndef SEMIEQ_H
#define SEMIEQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SEMIEQ_OK = 0,
  SEMIEQ_ERR_USAGE = 1,    /* bad arguments, unknown descriptor or class */
  SEMIEQ_ERR_PARSE = 2,    /* malformed system, equation or table file */
  SEMIEQ_ERR_INVALID = 3,  /* semantic violation (non-associative table, ...) */
  SEMIEQ_ERR_BUDGET = 4,   /* evaluation would exceed the configured budget */
  SEMIEQ_ERR_INTERNAL = 5, /* internal consistency check failed */
} semieq_status;

typedef struct semieq_semigroup semieq_semigroup;
typedef struct semieq_system semieq_system;

/* Message for the most recent failing call on this thread. */
const char* semieq_last_error(void);
void semieq_string_free(char* s);

/* ---- semigroup handles ---- */

/* Family descriptor (Zn:4, brandt:2, zrb:..., U3, ...) or table file path. */
semieq_status semieq_semigroup_create(const char* descriptor_or_path,
                                      semieq_semigroup** out);
/* Row-major table; entries in [0, order). */
semieq_status semieq_semigroup_from_table(uint32_t order, const uint32_t* row_major,
                                          semieq_semigroup** out);
uint32_t semieq_semigroup_order(const semieq_semigroup* s);
uint32_t semieq_semigroup_product(const semieq_semigroup* s, uint32_t a, uint32_t b);
void semieq_semigroup_free(semieq_semigroup* s);

/* ---- equation-system handles ---- */

semieq_status semieq_system_parse(const char* text, semieq_system** out);
/* Catalogue basis for a class id (group, regular, inverse, esolid, ...). */
semieq_status semieq_system_for_class(const char* class_id, semieq_system** out);
semieq_status semieq_system_render(const semieq_system* sys, char** out_text);
void semieq_system_free(semieq_system* sys);

/* Decides s |= sys.  verdict receives 0/1; report_json (optional, may be
 * NULL) receives the evaluation report. */
semieq_status semieq_evaluate(const semieq_semigroup* s, const semieq_system* sys,
                              uint64_t budget, int* verdict, char** report_json);

/* ---- command layer (mirrors the CLI subcommands) ---- */

typedef struct {
  uint64_t budget;     /* 0 means the default (1e8 matrix evaluations) */
  uint64_t seed;       /* echoed into reports */
  const char* corpus;  /* manifest path, or NULL for the builtin corpus */
  const char* format;  /* "text" (default) or "json" */
} semieq_options;

/* Every command fills *report (rendered in the requested format) and
 * *exit_code: 0 = verdict true / no discrepancies, 1 = verdict false /
 * discrepancies found. */
semieq_status semieq_cmd_check(const char* semigroup, const char* system,
                               const semieq_options* opts, char** report,
                               int* exit_code);
semieq_status semieq_cmd_classify(const char* semigroup, const semieq_options* opts,
                                  char** report, int* exit_code);
semieq_status semieq_cmd_crossval(const char* class_id, const semieq_options* opts,
                                  char** report, int* exit_code);
semieq_status semieq_cmd_closure(const char* class_id, const char* op,
                                 const semieq_options* opts, char** report,
                                 int* exit_code);
semieq_status semieq_cmd_skolemize(const char* system, const semieq_options* opts,
                                   char** report, int* exit_code);
semieq_status semieq_cmd_localize(const char* system, const semieq_options* opts,
                                  char** report, int* exit_code);
semieq_status semieq_cmd_psolve(const char* equation, const char* params_csv,
                                const semieq_options* opts, char** report,
                                int* exit_code);
semieq_status semieq_cmd_universal(const char* equation, const semieq_options* opts,
                                   char** report, int* exit_code);
semieq_status semieq_cmd_green(const char* semigroup, const semieq_options* opts,
                               char** report, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* SEMIEQ_H */
