#ifndef AGBCYL_AGBCYL_H
#define AGBCYL_AGBCYL_H

/* C interface to the agbcyl library. Objects cross the boundary as JSON
 * documents; strings returned through char** out-parameters are owned by the
 * caller and released with agb_string_free. Every function returns an
 * agb_status; on failure agb_last_error_message() describes the error for the
 * calling thread. */

#include <stddef.h>

#if defined(AGBCYL_BUILDING)
#define AGB_API __attribute__((visibility("default")))
#else
#define AGB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum agb_status {
  AGB_OK = 0,
  AGB_E_NON_UNIT_SERIES = 1,
  AGB_E_RESOURCE_LIMIT = 2,
  AGB_E_INADMISSIBLE_PAIR = 3,
  AGB_E_ILLEGAL_MOVE = 4,
  AGB_E_INVALID_PEAK_LIST = 5,
  AGB_E_INVALID_LEVELS = 6,
  AGB_E_NOT_COPRIME = 7,
  AGB_E_RANK_ERROR = 8,
  AGB_E_PARITY_DOMAIN = 9,
  AGB_E_NOT_NORMALISED = 10,
  AGB_E_INVALID_ARGUMENT = 11,
  AGB_E_PARSE = 20,       /* malformed JSON or object */
  AGB_E_USAGE = 21,       /* unknown method, check, object or null pointer */
  AGB_E_INTERNAL = 30,
  AGB_DONE = 40           /* iterator exhausted */
} agb_status;

typedef struct agb_series agb_series;
typedef struct agb_enum agb_enum;

AGB_API const char* agb_version(void);
AGB_API const char* agb_last_error_message(void);
AGB_API const char* agb_status_name(agb_status status);
AGB_API void agb_string_free(char* s);

/* Parameters are a JSON object with optional keys r, d, weight, xi, order,
 * max_entry, max_norm, k, b, a, even. */

/* Generating function by the named method (brute, general, borodin,
 * determinant, limit, bosonic, product, fermionic, cpag, principal,
 * highest-lift). */
AGB_API agb_status agb_series_compute(const char* method, const char* params_json,
                                      agb_series** out);
AGB_API agb_status agb_series_from_json(const char* series_json, agb_series** out);
AGB_API int agb_series_truncation(const agb_series* s);
/* Decimal string of the coefficient of q^n. */
AGB_API agb_status agb_series_coeff(const agb_series* s, int n, char** out);
AGB_API agb_status agb_series_to_json(const agb_series* s, char** out);
/* 1 when equal up to the common truncation, 0 otherwise, -1 on null input. */
AGB_API int agb_series_equal(const agb_series* x, const agb_series* y);
AGB_API agb_status agb_series_mul(const agb_series* x, const agb_series* y, agb_series** out);
AGB_API agb_status agb_series_invert(const agb_series* x, agb_series** out);
AGB_API void agb_series_free(agb_series* s);

/* Runs a named cross-check; *ok is 1 when it passed. */
AGB_API agb_status agb_verify(const char* check, const char* params_json, char** report_json,
                              int* ok);

/* Canonical-order enumeration of cyl, gcyl, hl (highest-lift cyl), abacus,
 * multipartition, path (decorated) or bpath objects. */
AGB_API agb_status agb_enum_open(const char* object, const char* params_json, agb_enum** out);
/* AGB_OK with one JSON document, or AGB_DONE. */
AGB_API agb_status agb_enum_next(agb_enum* it, char** out);
AGB_API size_t agb_enum_size(const agb_enum* it);
AGB_API void agb_enum_free(agb_enum* it);

/* Converts between cyl, path, abacus, multipartition and peaklist forms.
 * Conversions into a path accept "a"; conversions out of a path or a peak
 * list need "weight". */
AGB_API agb_status agb_map(const char* from, const char* to, const char* input_json,
                           const char* params_json, char** out);

/* ASCII picture of a cyl, path, abacus (from a cyl or abacus document) or
 * multipartition. */
AGB_API agb_status agb_render(const char* object, const char* input_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
