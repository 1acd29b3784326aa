/* orifold C API: exact verification and monodromy analysis of flat
 * F-manifold data behind an opaque-handle, error-code surface.
 *
 * All documents are JSON texts in the orifold/1 schema. Functions returning
 * char* allocate with malloc; release with orf_string_free. Thread-safety:
 * handles are not shared between threads; orf_last_error is thread-local.
 */
#ifndef ORIFOLD_ORIFOLD_H
#define ORIFOLD_ORIFOLD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct orf_ctx_s orf_ctx;
typedef struct orf_doc_s orf_doc;

/* exit/status codes shared with the CLI */
enum {
    ORF_OK = 0,
    ORF_FAIL = 1,  /* operation ran, verdict negative (report still produced) */
    ORF_ERROR = 2  /* parse/usage/internal error; see orf_last_error() */
};

orf_ctx* orf_ctx_new(void);
void orf_ctx_free(orf_ctx* ctx);

/* Configuration keys: "order", "u-order", "z-order", "mode" (exact|float),
 * "bits", "tol", "perm" ("1,2,3"), "tau" ("p/q" or "p/q,r/s"), "workers",
 * "orbit". Returns ORF_OK or ORF_ERROR. */
int orf_ctx_set(orf_ctx* ctx, const char* key, const char* value);

/* Last error message of the calling thread ("" when none). */
const char* orf_last_error(void);

orf_doc* orf_doc_parse(const char* json_text);
char* orf_doc_to_json(const orf_doc* doc);
void orf_doc_free(orf_doc* doc);
void orf_string_free(char* s);

/* Operations return a JSON report (caller frees) or NULL on ORF_ERROR;
 * *status receives ORF_OK / ORF_FAIL / ORF_ERROR. */
char* orf_verify(orf_ctx* ctx, const orf_doc* structure, int* status);
char* orf_analyze(orf_ctx* ctx, const orf_doc* structure, int* status);
char* orf_validate(orf_ctx* ctx, const orf_doc* datum, int* status);
char* orf_braid(orf_ctx* ctx, const orf_doc* datum, const char* word, int* status);
char* orf_cohft(orf_ctx* ctx, const orf_doc* structure, int tails, int max_edges, int* status);

const char* orf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ORIFOLD_ORIFOLD_H */
