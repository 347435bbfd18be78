/* orlicz.h - C interface to the generalized Orlicz growth toolkit.
 *
 * All state lives behind opaque handles; every function that can fail
 * returns a status code (below) and, where a buffer is supplied, a
 * NUL-terminated error message. Status codes double as process exit codes:
 *   0 all checks hold / success
 *   1 a condition was violated (a witness is in the report)
 *   2 usage or configuration error
 *   3 numerical non-convergence
 *
 * Handles are not thread-safe individually, but distinct handles may be used
 * from distinct threads freely; the library keeps no global mutable state.
 */
#ifndef ORLICZ_H
#define ORLICZ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct orlicz_config orlicz_config;
typedef struct orlicz_report orlicz_report;
typedef struct orlicz_growth orlicz_growth;
typedef struct orlicz_lambda orlicz_lambda;

enum {
    ORLICZ_OK = 0,
    ORLICZ_VIOLATED = 1,
    ORLICZ_USAGE_ERROR = 2,
    ORLICZ_NO_CONVERGENCE = 3
};

const char* orlicz_version(void);

/* --- configuration ------------------------------------------------------ */

/* Parse the flat sectioned key=value format. NULL on failure with a message
 * in err (if err != NULL, errlen > 0). */
orlicz_config* orlicz_config_parse(const char* text, char* err, size_t errlen);
orlicz_config* orlicz_config_load(const char* path, char* err, size_t errlen);

/* Apply one "section.key=value" override; global keys carry no dot. */
int orlicz_config_set(orlicz_config* cfg, const char* dotted_key, const char* value);

/* Canonical serialization; free the result with orlicz_string_free. */
char* orlicz_config_dump(const orlicz_config* cfg);

void orlicz_config_free(orlicz_config* cfg);

/* --- commands ------------------------------------------------------------ */

/* Run one of: "verify-conditions", "lambda", "iterate", "solve". Returns a
 * report handle (even for violation/non-convergence outcomes) or NULL on
 * usage errors, with a message in err. */
orlicz_report* orlicz_run(const orlicz_config* cfg, const char* command, char* err,
                          size_t errlen);

/* Merge previously produced report JSON documents into one. */
orlicz_report* orlicz_merge_reports(const char* const* report_jsons, size_t count, char* err,
                                    size_t errlen);

int orlicz_report_status(const orlicz_report* rep);
/* The report JSON; owned by the report handle. */
const char* orlicz_report_json(const orlicz_report* rep);

/* File artifacts (trace CSVs, field files, oscillation curves). */
size_t orlicz_report_artifact_count(const orlicz_report* rep);
const char* orlicz_report_artifact_name(const orlicz_report* rep, size_t index);
const char* orlicz_report_artifact_data(const orlicz_report* rep, size_t index);

/* Write report.json plus all artifacts under dir (created if missing); each
 * file is written to a temporary name and renamed into place. */
int orlicz_report_write(const orlicz_report* rep, const char* dir, char* err, size_t errlen);

void orlicz_report_free(orlicz_report* rep);

/* --- growth and modulus evaluators ---------------------------------------- */

orlicz_growth* orlicz_growth_create(const orlicz_config* cfg, char* err, size_t errlen);
int orlicz_growth_eval_g(const orlicz_growth* g, double x, double y, double t, double v,
                         double* out);
int orlicz_growth_eval_G(const orlicz_growth* g, double x, double y, double t, double z,
                         double* out);
int orlicz_growth_eval_psi(const orlicz_growth* g, double x, double y, double t, double v,
                           double* out);
void orlicz_growth_free(orlicz_growth* g);

orlicz_lambda* orlicz_lambda_create(const orlicz_config* cfg, char* err, size_t errlen);
int orlicz_lambda_eval(const orlicz_lambda* l, double r, double* out);
/* Lambda(beta, r) = exp(beta * lambda(r)) */
int orlicz_lambda_eval_big(const orlicz_lambda* l, double beta, double r, double* out);
/* ln Lambda1(c, beta, r) = c * Lambda(beta, r); the log form is exposed
 * because the plain value overflows double readily. */
int orlicz_lambda_eval_log_big1(const orlicz_lambda* l, double c, double beta, double r,
                                double* out);
void orlicz_lambda_free(orlicz_lambda* l);

void orlicz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ORLICZ_H */
