#ifndef SAHL_H
#define SAHL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SAHL_API __attribute__((visibility("default")))
#else
#define SAHL_API
#endif

/* Status codes double as CLI exit codes. */
typedef enum sahl_status {
  SAHL_OK = 0,
  SAHL_ERR_PARSE = 2,
  SAHL_ERR_UNSUPPORTED = 3,
  SAHL_ERR_COUNTEREXAMPLE = 4,
  SAHL_ERR_RESOURCE = 5,
  SAHL_ERR_INVALID = 6,
  SAHL_ERR_INTERNAL = 7
} sahl_status;

typedef enum sahl_format {
  SAHL_FORMAT_TEXT = 0,
  SAHL_FORMAT_JSON = 1,
  SAHL_FORMAT_TPTP = 2
} sahl_format;

typedef struct sahl_formula sahl_formula;

typedef struct sahl_correspond_options {
  int raw;
  int no_simplify;
  int trace;
  sahl_format format;
} sahl_correspond_options;

typedef struct sahl_verify_options {
  int max_n;
  size_t sample4;
  uint64_t seed;
} sahl_verify_options;

SAHL_API const char* sahl_version(void);

/* Message of the last failed call on this thread; empty if none. */
SAHL_API const char* sahl_last_error(void);

/* Every char* handed out by the library is released with this. */
SAHL_API void sahl_string_free(char* s);

SAHL_API void sahl_correspond_options_init(sahl_correspond_options* o);
SAHL_API void sahl_verify_options_init(sahl_verify_options* o);

SAHL_API sahl_status sahl_parse(const char* text, sahl_formula** out);
SAHL_API void sahl_formula_free(sahl_formula* f);
SAHL_API sahl_status sahl_formula_print(const sahl_formula* f, char** out);

/* class_name may be NULL. */
SAHL_API sahl_status sahl_classify(const sahl_formula* f, char** report, char** class_name);

/* On SAHL_ERR_UNSUPPORTED, *out holds the classification report. */
SAHL_API sahl_status sahl_correspond(const sahl_formula* f, const sahl_correspond_options* o, char** out);

/* st or so may be NULL. */
SAHL_API sahl_status sahl_translate(const sahl_formula* f, char** st, char** so);

/* fo_text NULL checks the generated correspondent. A refuted correspondent
   yields SAHL_ERR_COUNTEREXAMPLE with the frame described in *out. */
SAHL_API sahl_status sahl_verify(const sahl_formula* f, const char* fo_text, const sahl_verify_options* o,
                                 char** out);

/* Exactly one of frame_literal (non-NULL) or all_frames_n (> 0). */
SAHL_API sahl_status sahl_props(const sahl_formula* f, const char* frame_literal, int all_frames_n, char** out);

/* 1 if the two first-order formulas agree on all frames up to max_n, 0 if
   not; negative status on error. */
SAHL_API int sahl_fo_equivalent(const char* a, const char* b, int max_n);

#ifdef __cplusplus
}
#endif

#endif
