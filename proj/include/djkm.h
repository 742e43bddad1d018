#ifndef DJKM_H
#define DJKM_H

/* C interface to the hyperelliptic current-algebra verification library.
 *
 * All functions taking a djkm_ctx are reentrant per context; a context must
 * not be used from two threads at once. Functions that produce text allocate
 * a NUL-terminated UTF-8 buffer into *out; release it with
 * djkm_string_free(). On any nonzero return, *out is left untouched and
 * djkm_last_error() describes the failure (or the first verification
 * witness). DJKM_EVERIFY still fills *out with the full report.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct djkm_ctx djkm_ctx;

enum {
  DJKM_OK = 0,       /* success */
  DJKM_EVERIFY = 1,  /* verification ran and found failures */
  DJKM_EINVAL = 2,   /* malformed input or option */
  DJKM_EINTERNAL = 3 /* unexpected internal failure */
};

/* Context lifecycle. A fresh context has workers=1, seed=2026 and the
 * standard conventions. */
djkm_ctx* djkm_ctx_new(void);
void djkm_ctx_free(djkm_ctx* ctx);

/* Options (all values are strings):
 *   "workers"            positive integer
 *   "seed"               unsigned 64-bit integer
 *   "heisenberg_variant" "standard" | "alternate"
 *   "psi_index"          "standard" | "alternate"
 *   "e1_product"         "normal_ordered" | "plain"
 */
int djkm_ctx_set_option(djkm_ctx* ctx, const char* key, const char* value);

/* Message for the most recent failure on this context; empty string when the
 * last call succeeded. Owned by the context. */
const char* djkm_last_error(const djkm_ctx* ctx);

/* Reduction coefficient family table P_{which,k}, -4 <= k <= kmax, in the
 * given format ("csv" or "json"). */
int djkm_families_table(djkm_ctx* ctx, int which, int kmax, const char* format,
                        char** out);

/* Reduces a one-form monomial ("dt", "t^-5 u dt", "t^2 du", ...) to the
 * five-dimensional cokernel basis; JSON object {"w0","w-4".."w-1"}. */
int djkm_reduce_form(djkm_ctx* ctx, const char* form, char** out);

/* Psi(k) = class of t^k u dt from the closed-form table (honors the
 * "psi_index" option); same JSON shape as djkm_reduce_form. */
int djkm_psi(djkm_ctx* ctx, int k, char** out);

/* Bracket of two basis elements named like "e:1", "f1:-2", "w:0", computed
 * with generic parameter c. JSON array [[key, coefficient], ...]. */
int djkm_bracket(djkm_ctx* ctx, const char* key_a, const char* key_b,
                 char** out);

/* As djkm_bracket for every ordered pair from the basis window |n| <=
 * window; JSON array of {"a","b","bracket"} rows. */
int djkm_bracket_table(djkm_ctx* ctx, int window, char** out);

/* Lie-algebra verification sweeps with generic parameter: antisymmetry +
 * central annihilation, Jacobi, and closed-vs-reduction backend agreement,
 * each over its own basis window. JSON report; DJKM_EVERIFY on failures. */
int djkm_verify_algebra(djkm_ctx* ctx, int antisym_window, int jacobi_window,
                        int agreement_window, char** out);

/* Free-field verification battery driven by a JSON config:
 * {
 *   "window": 4,                  commutator mode window
 *   "oscillator_window": 4,       CCR mode window
 *   "heisenberg_window": 6,       b/b1 relation mode window
 *   "soundness_samples": 64,      widened-enumeration spot checks (0 skips)
 *   "c0": ["2", "3/5", "-7/3"],   ring parameter values (c0^2 != 1)
 *   "kappa0": ["0", "1", "-4"],   Heisenberg central values
 *   "borel": [["5","1","2","3"],
 *             ["0","0","0","0"]], rows (lambda, mu, nu, varkappa)
 *   "r": [0, 1],                  normal-ordering flavors
 *   "states": [...],              optional explicit test states
 *   "checks": ["oscillator", "heisenberg", "realization", "enumeration"]
 * }
 * Missing keys take the defaults above (states: the seeded default suite,
 * checks: all four). JSON report; DJKM_EVERIFY on failures. */
int djkm_verify_fock(djkm_ctx* ctx, const char* config_json, char** out);

/* Releases buffers returned through out parameters. */
void djkm_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* DJKM_H */
