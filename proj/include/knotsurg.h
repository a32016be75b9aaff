/* knotsurg: Dehn-surgery classification on cable knots and
 * cosmetic-surgery obstructions, exact arithmetic throughout.
 *
 * C API: opaque context handle, integer status codes, JSON results.
 * Strings returned through out-parameters are heap-allocated and must be
 * released with knotsurg_free_string().
 */
#ifndef KNOTSURG_H
#define KNOTSURG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct knotsurg_ctx knotsurg_ctx;

/* Status codes. */
enum {
    KNOTSURG_OK = 0,
    KNOTSURG_INVALID_INPUT = 1,
    KNOTSURG_RESOURCE_LIMIT = 2,
    KNOTSURG_INTERNAL_ERROR = 3
};

knotsurg_ctx* knotsurg_ctx_new(void);
void knotsurg_ctx_free(knotsurg_ctx* ctx);

/* Cap on crossing counts for polynomial computations (default 26). */
int knotsurg_set_max_crossings(knotsurg_ctx* ctx, int cap);
int knotsurg_get_max_crossings(const knotsurg_ctx* ctx);

/* Loads the knot table CSV (name,kind,payload,declared_class,tau) used to
 * resolve K(name) references. */
int knotsurg_load_table(knotsurg_ctx* ctx, const char* path);
int knotsurg_load_table_csv(knotsurg_ctx* ctx, const char* csv_content);

/* Message for the last failing call on this context. */
const char* knotsurg_last_error(const knotsurg_ctx* ctx);

void knotsurg_free_string(char* s);

/* Canonical form of a slope ("m/n", "m", or "inf"). */
int knotsurg_normalize_slope(knotsurg_ctx* ctx, const char* slope, char** out_json);

/* Case tag and JSJ descriptor of the r-surgery on a cable knot expression. */
int knotsurg_classify(knotsurg_ctx* ctx, const char* knot_expr, const char* slope,
                      char** out_json);

/* Delta, Delta''(1), V (when computable) and V'''(1) for an expression. */
int knotsurg_invariants(knotsurg_ctx* ctx, const char* knot_expr, char** out_json);

/* Full obstruction report for (r, s); pass s = NULL for s = -r, and
 * tau_str = NULL (or "") when tau is not supplied. */
int knotsurg_obstruct(knotsurg_ctx* ctx, const char* knot_expr, const char* r, const char* s,
                      const char* tau_str, char** out_json);

/* Batch scan of the loaded table over the slope grid; returns JSON lines,
 * one report per line. */
int knotsurg_scan(knotsurg_ctx* ctx, long max_m, long max_n, char** out_json_lines);

/* Cabling-constant fit over the named table rows (comma-separated names),
 * epsilon_sign in {+1,-1}. */
int knotsurg_fit(knotsurg_ctx* ctx, long q, int epsilon_sign, const char* sample_names,
                 char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* KNOTSURG_H */
