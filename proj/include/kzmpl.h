#ifndef KZMPL_H
#define KZMPL_H

/*
 * C interface to the kzmpl library: shuffle-algebra word combinatorics,
 * multiple polylogarithm / multiple zeta value evaluation, Drinfel'd
 * associator export, and the verification suites (inversion formulas,
 * duality, connection formula, ODE transport, Riemann-Hilbert
 * reconstruction).
 *
 * Conventions:
 *   - Words are passed as text: a string over {0,1} ("011" = xi0 xi1 xi1),
 *     an MZV index tuple "(2,1)", or "e"/"" for the empty word.
 *   - Functions return KZMPL_OK on success; on any other status
 *     kzmpl_last_error() describes the failure (thread-local).
 *   - Strings returned through char** are heap-allocated; release them with
 *     kzmpl_string_free().  Handles are released with their _free function.
 */

#include <stddef.h>

#if defined(_WIN32)
#define KZMPL_API __declspec(dllexport)
#else
#define KZMPL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    KZMPL_OK = 0,
    KZMPL_VERIFY_FAIL = 1, /* a verification suite ran and found violations */
    KZMPL_ERR_PARSE = 2,
    KZMPL_ERR_DOMAIN = 3,
    KZMPL_ERR_INTERNAL = 4
};

typedef struct kzmpl_ctx kzmpl_ctx;   /* evaluation context + zeta table */
typedef struct kzmpl_poly kzmpl_poly; /* exact rational word polynomial */

KZMPL_API const char* kzmpl_version(void);
KZMPL_API const char* kzmpl_last_error(void);
KZMPL_API void kzmpl_string_free(char* s);

/* weight: maximum zeta-table weight the context may be asked for (<= 10);
 * tol: target absolute error of elementary evaluations (>= 1e-12). */
KZMPL_API kzmpl_ctx* kzmpl_ctx_new(int weight, double tol);
KZMPL_API void kzmpl_ctx_free(kzmpl_ctx* ctx);

/* Register a perturbation delta on the table entry for an S10 word; it is
 * applied to the tables handed to the Riemann-Hilbert solver and to table
 * exports, never to the context's own evaluators. */
KZMPL_API int kzmpl_ctx_perturb_zeta(kzmpl_ctx* ctx, const char* word, double delta);

/* --- exact word combinatorics ------------------------------------------- */

KZMPL_API int kzmpl_poly_parse(const char* text, kzmpl_poly** out);
KZMPL_API void kzmpl_poly_free(kzmpl_poly* p);
KZMPL_API int kzmpl_poly_shuffle(const kzmpl_poly* a, const kzmpl_poly* b,
                                 kzmpl_poly** out);
KZMPL_API int kzmpl_poly_reg0(const kzmpl_poly* p, kzmpl_poly** out);
KZMPL_API int kzmpl_poly_reg1(const kzmpl_poly* p, kzmpl_poly** out);
KZMPL_API int kzmpl_poly_reg10(const kzmpl_poly* p, kzmpl_poly** out);
KZMPL_API int kzmpl_poly_antipode(const kzmpl_poly* p, kzmpl_poly** out);
KZMPL_API int kzmpl_poly_tau(const kzmpl_poly* p, kzmpl_poly** out);
KZMPL_API int kzmpl_poly_tstar(const kzmpl_poly* p, kzmpl_poly** out);
/* <a, b> pairing; the result is written as a decimal fraction "p/q". */
KZMPL_API int kzmpl_poly_pair(const kzmpl_poly* a, const kzmpl_poly* b, char** out);
KZMPL_API int kzmpl_poly_to_json(const kzmpl_poly* p, char** out);
KZMPL_API int kzmpl_poly_to_text(const kzmpl_poly* p, char** out);

/* --- numerics ------------------------------------------------------------ */

/* Li(word; z_re + i z_im); out_err may be NULL. */
KZMPL_API int kzmpl_li(kzmpl_ctx* ctx, const char* word, double z_re, double z_im,
                       double* out_re, double* out_im, double* out_err);
/* zeta(word) for an S10 word, via the z = 1/2 inversion route. */
KZMPL_API int kzmpl_zeta(kzmpl_ctx* ctx, const char* word, double* out_value,
                         double* out_err);
/* zeta(reg10(word)) for an arbitrary word. */
KZMPL_API int kzmpl_zeta_reg(kzmpl_ctx* ctx, const char* word, double* out_value,
                             double* out_err);

/* Drinfel'd associator coefficients up to the given order, as JSON
 * {"order":N,"entries":[{"word","re","im","err"}]}. */
KZMPL_API int kzmpl_associator_json(kzmpl_ctx* ctx, int order, char** out);

/* Zeta table up to the given weight (with registered perturbations applied),
 * as JSON [{"word","mzv_indices","value","err"}]. */
KZMPL_API int kzmpl_zeta_table_json(kzmpl_ctx* ctx, int weight, char** out);

/* --- verification suites -------------------------------------------------- */

/* suite: one of "algebra", "gif", "duality", "connection", "ode", "rh".
 * options_json (may be NULL): {"weight":int, "tol":double,
 * "z_points":[[re,im],...], "seed":uint, "steps":int}; omitted fields take
 * suite defaults.  Registered perturbations feed the "rh" suite's table.
 * A JSON report is produced in all cases; the return value is KZMPL_OK when
 * every residual is below tolerance and KZMPL_VERIFY_FAIL otherwise. */
KZMPL_API int kzmpl_verify(kzmpl_ctx* ctx, const char* suite,
                           const char* options_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
