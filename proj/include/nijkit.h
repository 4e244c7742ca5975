/* nijkit C interface: exact Nijenhuis / Poisson-Nijenhuis computations.
 *
 * Every verb takes its input as a JSON document and hands back an opaque
 * report holding a human-readable text and a JSON document. The report is
 * allocated even when the call fails, so the caller can print the error;
 * release it with nk_report_free. Strings returned by accessors live as long
 * as their handle. */
#ifndef NIJKIT_H
#define NIJKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NK_API __declspec(dllexport)
#else
#define NK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nk_status {
  NK_OK = 0,
  NK_CHECK_FAILED = 1, /* a mathematical check failed; the report names it */
  NK_INPUT_ERROR = 2,  /* malformed input or bad arguments */
  NK_INTERNAL_ERROR = 3
} nk_status;

typedef struct nk_report nk_report;
typedef struct nk_scalar nk_scalar;

NK_API const char* nk_version(void);

/* NIJKIT_SEED if set and numeric, otherwise the built-in default. */
NK_API uint64_t nk_default_seed(void);

NK_API nk_status nk_torsion(const char* operator_json, nk_report** out);
NK_API nk_status nk_certify_pair(const char* pair_json, nk_report** out);
NK_API nk_status nk_canonical(int n, int certify, nk_report** out);
NK_API nk_status nk_turiel(const char* operator_json, nk_report** out);
NK_API nk_status nk_companion_convert(int n, nk_report** out);
NK_API nk_status nk_solve_diagonal(const char* problem_json, nk_report** out);
NK_API nk_status nk_solve_canonical(const char* problem_json, nk_report** out);
NK_API nk_status nk_diagnostics(const char* problem_json, nk_report** out);

/* JSON array of {"name", "description"}. */
NK_API nk_status nk_preset_list(nk_report** out);
NK_API size_t nk_preset_count(void);
/* NULL when out of range. */
NK_API const char* nk_preset_name(size_t index);
NK_API nk_status nk_preset_run(const char* name, uint64_t seed, nk_report** out);

NK_API nk_status nk_report_status(const nk_report* r);
NK_API const char* nk_report_text(const nk_report* r);
/* Pretty-printed, key-sorted JSON; byte-identical across runs. */
NK_API const char* nk_report_json(const nk_report* r);
NK_API void nk_report_free(nk_report* r);

/* Scalar fields on a chart of coordinate names. */
NK_API nk_status nk_scalar_parse(const char* const* names, size_t count, const char* expr, nk_scalar** out);
NK_API nk_status nk_scalar_partial(const nk_scalar* f, const char* coordinate, nk_scalar** out);
NK_API nk_status nk_scalar_mul(const nk_scalar* a, const nk_scalar* b, nk_scalar** out);
NK_API int nk_scalar_equal(const nk_scalar* a, const nk_scalar* b);
NK_API const char* nk_scalar_text(const nk_scalar* f);
NK_API void nk_scalar_free(nk_scalar* f);

/* Message of the last failed nk_scalar_* call on this thread. */
NK_API const char* nk_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
