/* C API of the innerideal library.
 *
 * Handles are opaque; every function returns a status code, with details
 * available from iiq_last_error() (thread local). Strings returned through
 * out-parameters are heap allocated and must be released with
 * iiq_string_free().
 */
#ifndef INNERIDEAL_H
#define INNERIDEAL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct iiq_algebra iiq_algebra;

typedef enum iiq_status {
    IIQ_OK = 0,
    IIQ_VIOLATION = 1,     /* a checked mathematical invariant failed */
    IIQ_PRECONDITION = 2,  /* caller violated an operation contract */
    IIQ_PARSE = 3,         /* malformed input document */
    IIQ_INTERNAL = 4
} iiq_status;

/* Message describing the most recent failure on this thread. */
const char* iiq_last_error(void);

void iiq_string_free(char* s);

/* ---- algebra documents ------------------------------------------------- */

/* Parses the textual algebra format. The document's named subspaces stay
 * attached to the handle. */
iiq_status iiq_algebra_parse(const char* text, iiq_algebra** out);
void iiq_algebra_free(iiq_algebra* a);

iiq_status iiq_algebra_emit(const iiq_algebra* a, char** out_text);

int iiq_algebra_dim(const iiq_algebra* a);
/* 1 when the named subspace exists in the document. */
int iiq_algebra_has_subspace(const iiq_algebra* a, const char* name);

/* ---- commands ----------------------------------------------------------- */

/* Full predicate report (JSON) for the named subspace viewed inside A^(k). */
iiq_status iiq_analyze(const iiq_algebra* a, const char* subspace, int k, char** json_out);

/* Bar-minimal reduction; with emit_witness != 0 the fragment document holding
 * the pair and conjugator chain is returned as well (pass NULL otherwise). */
iiq_status iiq_reduce(const iiq_algebra* a, const char* subspace, int k, int emit_witness,
                      char** json_out, char** fragment_out);

/* DOT graph of the idempotent-pair poset. */
iiq_status iiq_poset(const iiq_algebra* a, int budget, char** dot_out);

/* Seeded conformance run over generated algebras. field is "Q" or "F<p>".
 * Counterexample files are written under out_dir (may be NULL for the current
 * directory). Returns IIQ_VIOLATION when violations were found. */
iiq_status iiq_fuzz(uint64_t seed, int count, int max_dim, const char* field,
                    const char* out_dir, int inject_mutant, char** summary_out);

#ifdef __cplusplus
}
#endif

#endif /* INNERIDEAL_H */
