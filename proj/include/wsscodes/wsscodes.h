#ifndef WSSCODES_H
#define WSSCODES_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WSS_API __declspec(dllexport)
#else
#define WSS_API __attribute__((visibility("default")))
#endif

typedef enum wss_status {
  WSS_OK = 0,
  WSS_E_INVALID_ARGUMENT = 1,
  WSS_E_NOT_INVERTIBLE = 2,
  WSS_E_BUDGET_EXCEEDED = 3,
  WSS_E_BOUND_EXCEEDED = 4,
  WSS_E_VERIFICATION_FAILED = 5,
  WSS_E_PARSE = 6,
  WSS_E_NULL_POINTER = 7,
  WSS_E_INTERNAL = 8
} wss_status;

typedef enum wss_format { WSS_FORMAT_TEXT = 0, WSS_FORMAT_CSV = 1, WSS_FORMAT_JSON = 2 } wss_format;

/* Outcome of a completed command; the values double as CLI exit codes. */
typedef enum wss_outcome {
  WSS_OUTCOME_PASS = 0,
  WSS_OUTCOME_FAIL = 2,
  WSS_OUTCOME_DISCREPANCY = 3
} wss_outcome;

typedef struct wss_context wss_context;
typedef struct wss_report wss_report;

WSS_API const char* wss_version(void);
WSS_API const char* wss_status_string(wss_status status);

WSS_API wss_context* wss_context_new(void);
WSS_API void wss_context_free(wss_context* ctx);
WSS_API wss_status wss_context_set_format(wss_context* ctx, wss_format format);
/* "csv", "json" or "text" */
WSS_API wss_status wss_context_set_format_name(wss_context* ctx, const char* name);
/* Maximum number of codeword-cell visits for an enumeration. */
WSS_API wss_status wss_context_set_budget(wss_context* ctx, uint64_t cells);
WSS_API wss_status wss_context_set_pell_bound(wss_context* ctx, uint64_t bound);
/* Message of the last failed call on this context ("" if none). */
WSS_API const char* wss_context_last_error(const wss_context* ctx);

/* Rendered output in the context's format; owned by the report. */
WSS_API const char* wss_report_text(const wss_report* report);
/* One-line description of the outcome ("" when there is nothing to add). */
WSS_API const char* wss_report_summary(const wss_report* report);
WSS_API wss_outcome wss_report_outcome(const wss_report* report);
WSS_API void wss_report_free(wss_report* report);

/* Scalar queries. */
WSS_API wss_status wss_period(wss_context* ctx, int64_t A, int64_t B, uint64_t modulus, uint64_t* out);
WSS_API wss_status wss_poly_order(wss_context* ctx, const char* poly, uint64_t modulus, uint64_t* out);
WSS_API wss_status wss_legendre(wss_context* ctx, int64_t a, uint64_t p, int* out);
WSS_API wss_status wss_squarefree_part(wss_context* ctx, uint64_t n, uint64_t* out);

/* Report-producing commands. On WSS_OK, *out receives a report to be freed
   with wss_report_free. Polynomials use the form "x^2+29x+19 (mod 49)"; a
   nonzero modulus argument supplies or confirms the modulus. */
WSS_API wss_status wss_period_report(wss_context* ctx, int64_t A, int64_t B, uint64_t modulus, wss_report** out);
WSS_API wss_status wss_wss_by_d(wss_context* ctx, uint64_t d, uint64_t p, wss_report** out);
WSS_API wss_status wss_wss_by_coeffs(wss_context* ctx, int64_t A, int64_t B, uint64_t p, wss_report** out);
/* kind: "reducible", "double_root" or "irreducible"; D = 0 selects the default order. */
WSS_API wss_status wss_construct(wss_context* ctx, uint64_t p, const char* kind, uint64_t D, wss_report** out);
WSS_API wss_status wss_double_root(wss_context* ctx, uint64_t p, wss_report** out);
/* method: "enumerate", "formula" or "auto" */
WSS_API wss_status wss_weights(wss_context* ctx, const char* poly, uint64_t modulus, const char* method,
                               wss_report** out);
WSS_API wss_status wss_classify(wss_context* ctx, const char* poly, uint64_t modulus, wss_report** out);
WSS_API wss_status wss_table(wss_context* ctx, int table_id, wss_report** out);
/* methods: comma-separated subset of "period,fibonacci,alpha"; NULL or "" selects all that apply. */
WSS_API wss_status wss_prationality(wss_context* ctx, uint64_t d, uint64_t p, const char* methods, wss_report** out);
WSS_API wss_status wss_alpha(wss_context* ctx, uint64_t p, wss_report** out);
WSS_API wss_status wss_alpha_scan(wss_context* ctx, uint64_t p_max, wss_report** out);

#ifdef __cplusplus
}
#endif

#endif
