/* Holomorphic Poisson spectral sequences of nilmanifolds: C interface. */
#ifndef HPSS_HPSS_H
#define HPSS_HPSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HPSS_API __declspec(dllexport)
#else
#define HPSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hpss_algebra hpss_algebra;
typedef struct hpss_lambda hpss_lambda;
typedef struct hpss_sample hpss_sample;

typedef enum hpss_status {
  HPSS_OK = 0,
  HPSS_ERR_ARGUMENT = 1,
  HPSS_ERR_VALIDATION = 2,
  HPSS_ERR_SCHEMA = 3,
  HPSS_ERR_INTERNAL = 4,
  HPSS_ERR_NOT_POISSON = 5,
  HPSS_ERR_NOT_FOUND = 6
} hpss_status;

HPSS_API const char* hpss_version(void);
/* Message of the last failing call on this thread; never NULL. */
HPSS_API const char* hpss_last_error(void);
/* Frees strings returned through char** out-parameters. */
HPSS_API void hpss_string_free(char* s);

HPSS_API hpss_status hpss_catalog_emit(const char* name, int n, int m, char** out_json);

/* Parsing only checks the schema; hpss_algebra_check reports validation failures. */
HPSS_API hpss_status hpss_algebra_from_json(const char* json, hpss_algebra** out);
HPSS_API hpss_status hpss_algebra_from_catalog(const char* name, int n, int m, hpss_algebra** out);
HPSS_API void hpss_algebra_free(hpss_algebra* alg);
HPSS_API hpss_status hpss_algebra_check(const hpss_algebra* alg, char** out_json, int* ok);
/* Complex dimension n; fails with HPSS_ERR_VALIDATION for invalid algebras. */
HPSS_API hpss_status hpss_algebra_complex_dim(const hpss_algebra* alg, int* n);

HPSS_API hpss_status hpss_lambda_standard(const hpss_algebra* alg, hpss_lambda** out);
HPSS_API hpss_status hpss_lambda_zero(const hpss_algebra* alg, hpss_lambda** out);
HPSS_API hpss_status hpss_lambda_from_json(const hpss_algebra* alg, const char* json, hpss_lambda** out);
HPSS_API hpss_status hpss_lambda_to_json(const hpss_lambda* lambda, char** out_json);
HPSS_API hpss_status hpss_lambda_flags(const hpss_lambda* lambda, int* holomorphic, int* poisson);
HPSS_API void hpss_lambda_free(hpss_lambda* lambda);

/* HPSS_ERR_NOT_FOUND when the budget runs out before any random draw is accepted;
 * the sample handle is still returned and holds the always-accepted bivectors. */
HPSS_API hpss_status hpss_sample_poisson(const hpss_algebra* alg, size_t count, uint64_t seed, hpss_sample** out);
HPSS_API size_t hpss_sample_size(const hpss_sample* sample);
HPSS_API hpss_status hpss_sample_get(const hpss_sample* sample, size_t index, hpss_lambda** out);
HPSS_API void hpss_sample_free(hpss_sample* sample);

/* r_max < 0 selects 2n+1. HPSS_ERR_INTERNAL when a self-check fails; the report is still written. */
HPSS_API hpss_status hpss_pages_report(const hpss_algebra* alg, const hpss_lambda* lambda, int r_max, int jobs,
                                       char** out_json);
HPSS_API hpss_status hpss_cohomology_report(const hpss_algebra* alg, const hpss_lambda* lambda, int jobs,
                                            char** out_json);
HPSS_API hpss_status hpss_degeneracy_report(const hpss_algebra* alg, const hpss_lambda* lambda, int jobs,
                                            char** out_json);
HPSS_API hpss_status hpss_degeneracy_page(const hpss_algebra* alg, const hpss_lambda* lambda, int jobs, int* page);
HPSS_API hpss_status hpss_render_table(const char* report_json, char** out_text);

#ifdef __cplusplus
}
#endif

#endif
