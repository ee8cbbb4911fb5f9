/*
 * mtshim - C API for the minuscule-representation / Shimura-type toolkit.
 *
 * All computation lives in the shared library behind this header. Callers
 * hold an opaque context, submit JSON descriptor documents, and receive JSON
 * reports. Strings returned through output parameters are heap-allocated and
 * must be released with mtshim_free().
 */

#ifndef MTSHIM_H
#define MTSHIM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mtshim_ctx mtshim_ctx;

/* status codes */
enum {
    MTSHIM_OK = 0,
    MTSHIM_EVALIDATION = 1, /* malformed input or broken invariant */
    MTSHIM_ERESOURCE = 2,   /* configured cap exceeded */
    MTSHIM_EINTERNAL = 3,
    MTSHIM_EARG = 4 /* null pointer / unknown name */
};

mtshim_ctx* mtshim_ctx_new(void);
void mtshim_ctx_free(mtshim_ctx* ctx);

/* cap names: "search", "closure", "weights", "target_dim" */
int mtshim_set_cap(mtshim_ctx* ctx, const char* name, long long value);

/* Runs one command against a JSON document; commands: classify, nonspecial,
 * mtpairs, dispatch, pel, reflex, embed-plan, selftest. *output receives the
 * report JSON (also on validation/resource errors, as an error object). */
int mtshim_run(mtshim_ctx* ctx, const char* command, const char* input_json, char** output);

/* Renders a report produced by mtshim_run as human-readable text. */
int mtshim_render_text(mtshim_ctx* ctx, const char* report_json, char** text_out);

/* Message of the last failing call on this context, empty if none. */
const char* mtshim_last_error(const mtshim_ctx* ctx);

void mtshim_free(char* str);

const char* mtshim_version(void);

/* Convenience entry points (no JSON). */

/* Decimal dimension of the minuscule representation; family in "ABCD". */
int mtshim_rep_dimension(mtshim_ctx* ctx, char family, int rank, int weight_index, char** decimal_out);

/* Duality name: "orthogonal", "symplectic", or "non-self-dual". */
int mtshim_rep_duality(mtshim_ctx* ctx, char family, int rank, int weight_index, char** name_out);

/* Is two_n of the form binomial(2^{m+1}, 2^m)? witness receives m (or -1). */
int mtshim_halfspin_exclusion(mtshim_ctx* ctx, long long two_n, int* excluded, long long* witness);

#ifdef __cplusplus
}
#endif

#endif /* MTSHIM_H */
