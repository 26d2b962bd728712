/* nctrace — exact classification of noncommutative polynomial values on
 * matrix algebras.
 *
 * C interface to the shared library. All functions return a status code;
 * results travel through out-parameters. Every char* handed out is a
 * NUL-terminated heap string released with nct_string_free; every nct_poly*
 * is released with nct_poly_free. Out-parameters may be NULL to skip a
 * result. On failure, *errmsg (when errmsg is non-NULL) receives a
 * diagnostic string.
 *
 * Structured results are JSON documents (top-level "schema": 1). All
 * arithmetic is exact over the rationals / Gaussian rationals; reports are
 * byte-identical for identical inputs and seeds.
 */

#ifndef NCTRACE_H
#define NCTRACE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nct_status {
  NCT_OK = 0,
  NCT_ERR_PARSE = 1,        /* malformed input text */
  NCT_ERR_INVALID = 2,      /* invalid argument, dimension mismatch, misuse */
  NCT_ERR_UNSUPPORTED = 3,  /* operation undefined for these parameters */
  NCT_ERR_LIMIT = 4,        /* work or data budget exceeded */
  NCT_ERR_INCONSISTENT = 5, /* internal cross-check failed (report a bug) */
  NCT_ERR_NOMEM = 6,        /* allocation failure */
  NCT_ERR_INTERNAL = 7      /* unexpected failure */
} nct_status;

/* Stable lowercase name of a status code ("ok", "parse", ...). Static
 * storage; do not free. */
const char* nct_status_name(nct_status s);

typedef enum nct_involution {
  NCT_INV_NONE = 0,       /* plain algebra, starred variables rejected */
  NCT_INV_TRANSPOSE = 1,  /* first kind, orthogonal type */
  NCT_INV_SYMPLECTIC = 2, /* first kind, even dimension only */
  NCT_INV_UNITARY = 3     /* second kind: conjugate-transpose over Q(i) */
} nct_involution;

/* Releases a string allocated by this library. NULL is a no-op. */
void nct_string_free(char* s);

/* ---- Polynomials in the free *-algebra ------------------------------- */

/* Opaque polynomial handle. */
typedef struct nct_poly nct_poly;

/* Parses the expression grammar:
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ['^' nat]
 *   atom   := rational | 'i' | var | '[' expr ',' expr ']' | '(' expr ')'
 *   var    := 'x' nat ["'"]
 * where [f,g] is the commutator f*g - g*f, the apostrophe is the involution,
 * and 'i' is the Gaussian imaginary unit. */
nct_status nct_poly_parse(const char* text, nct_poly** out, char** errmsg);

void nct_poly_free(nct_poly* p);

/* Canonical text form; parse and print are mutually inverse on it. */
nct_status nct_poly_print(const nct_poly* p, char** out, char** errmsg);

/* The involution: reverses words, stars letters, conjugates coefficients. */
nct_status nct_poly_star(const nct_poly* p, nct_poly** out, char** errmsg);

/* ---- Cyclic equivalence and commutator witnesses ---------------------- */

/* Are f and g cyclically equivalent (f - g a sum of commutators)?
 * *equivalent receives 1 or 0; *json_out the corresponding report. */
nct_status nct_cyc_equiv(const nct_poly* f, const nct_poly* g, int* equivalent, char** json_out,
                         char** errmsg);

/* JSON report with an explicit verified decomposition f = sum [g_k, h_k]
 * ("exists": false when f is not a sum of commutators). */
nct_status nct_commutator_witness(const nct_poly* f, char** json_out, char** errmsg);

/* ---- Classification ---------------------------------------------------- */

/* Classifies the linear span of the values of f on d x d matrices under the
 * given involution. JSON report: verdict, case label, predicted span with
 * canonical name/dimension/basis, exact certificates for the symbolic
 * decisions, sampling statistics. Deterministic in (f, d, inv, seed,
 * budget). budget <= 0 selects the default (512). */
nct_status nct_classify(const nct_poly* f, int d, nct_involution inv, uint64_t seed, int budget,
                        char** json_out, char** errmsg);

/* Exact trace certificate: does the trace of the symbolic value of f on
 * generic d x d matrices vanish identically? */
nct_status nct_trace_certificate(const nct_poly* f, int d, nct_involution inv, char** json_out,
                                 char** errmsg);

/* ---- Evaluation -------------------------------------------------------- */

/* Symbolic value of f on generic matrices: a d x d matrix of polynomials in
 * the entry variables z{l}_{i}{j}, plus its trace. */
nct_status nct_eval_generic(const nct_poly* f, int d, nct_involution inv, char** json_out,
                            char** errmsg);

/* Value of f at concrete matrices, one per variable in index order, written
 * as "[[..],[..]];[[..],[..]]" with exact rational or Gaussian entries. */
nct_status nct_eval_at(const nct_poly* f, int d, nct_involution inv, const char* matrices,
                       char** json_out, char** errmsg);

/* ---- Subspaces of d x d matrices --------------------------------------- */

/* Canonical subspace by name: one of "0", "Z", "K", "[S,K]", "S", "Z+K",
 * "[A,A]", "A" (aliases: zero, center, skew, sym, comm, full). JSON report
 * with dimension and basis. */
nct_status nct_canonical_subspace(const char* name, int d, nct_involution inv, char** json_out,
                                  char** errmsg);

/* Smallest subspace containing the given matrices ("[[..]];[[..]]" list) and
 * closed under the chosen brackets; kind is "lie" ([., all of M_d]), "skew"
 * ([., skew elements]) or "congruence" (M -> M A^t + A M). JSON report with
 * the closure's canonical name (or "other"), dimension, and basis. */
nct_status nct_closure(const char* kind, int d, nct_involution inv, const char* matrices,
                       char** json_out, char** errmsg);

/* ---- Regression corpus ------------------------------------------------- */

/* Runs the bundled regression fixtures. *all_pass receives 1 when every
 * fixture passes. The JSON report lists each fixture with its outcome. */
nct_status nct_corpus_run(int* all_pass, char** json_out, char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NCTRACE_H */
