#ifndef LIECERT_H
#define LIECERT_H

#include <stddef.h>

#if defined(_WIN32)
#define LIECERT_API __declspec(dllexport)
#else
#define LIECERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum liecert_status {
  LIECERT_OK = 0,
  LIECERT_ERR_USAGE = 2,    /* bad suite, rank or target */
  LIECERT_ERR_INTERNAL = 3, /* unexpected exception inside the library */
  LIECERT_ERR_NULL = 4      /* a required pointer argument was NULL */
} liecert_status;

typedef struct liecert_report liecert_report;

typedef struct liecert_summary {
  size_t pass;
  size_t fail;
  size_t skipped;
} liecert_summary;

LIECERT_API const char* liecert_version(void);

/* Message for the last failing call on this thread; empty when none. */
LIECERT_API const char* liecert_last_error(void);

LIECERT_API size_t liecert_suite_count(void);
LIECERT_API const char* liecert_suite_name(size_t index);

/* Runs a suite for every rank in [n_first, n_last]. */
LIECERT_API liecert_status liecert_verify(size_t n_first, size_t n_last, const char* suite, liecert_report** out);

/* Strings returned by the report accessors live as long as the report. */
LIECERT_API const char* liecert_report_json(const liecert_report* report);
LIECERT_API const char* liecert_report_text(const liecert_report* report);
LIECERT_API int liecert_report_exit_code(const liecert_report* report);
LIECERT_API liecert_summary liecert_report_summary(const liecert_report* report);
LIECERT_API size_t liecert_report_check_count(const liecert_report* report);
LIECERT_API void liecert_report_free(liecert_report* report);

/* Results are heap strings; release with liecert_string_free. */
LIECERT_API liecert_status liecert_dims_table(size_t n, char** out);
LIECERT_API liecert_status liecert_decompose(const char* target, const char* under, size_t n, int as_json, char** out);
LIECERT_API void liecert_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
