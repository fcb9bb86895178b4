/* C interface to the glw library: the universal gl(1|1) weight system on
 * chord diagrams, with exact values in Z[c,y].
 *
 * Conventions: every function returning glw_status reports failure through
 * the status code and glw_last_error(); out-parameters are written only on
 * GLW_OK (glw_verify also writes its report on GLW_ERR_VERIFY_FAILED).
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with glw_string_free.  Handles are released with their
 * matching *_free; freeing NULL is a no-op.
 *
 * Diagram text format: comma-separated "p-q" endpoint pairs ("0-2,1-3");
 * labels may be sparse and are compacted preserving circular order.  A
 * double-occurrence letter word ("ABAB") is also accepted.  The empty
 * string is the empty diagram.
 */

#ifndef GLW_H
#define GLW_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glw_status {
  GLW_OK = 0,
  GLW_ERR_PARSE = 1,            /* malformed diagram text */
  GLW_ERR_INVALID_ARGUMENT = 2, /* bad handle, range, suite, or algebra name */
  GLW_ERR_VERIFY_FAILED = 3,    /* a verification suite reported failures */
  GLW_ERR_INTERNAL = 4          /* an internal invariant was violated */
} glw_status;

typedef struct glw_diagram glw_diagram;
typedef struct glw_poly glw_poly;

/* Message for the most recent failure on this thread; "" if none. Owned by
 * the library and overwritten by the next failing call on the thread. */
const char* glw_last_error(void);

/* ---- diagrams ---- */

glw_status glw_diagram_parse(const char* text, glw_diagram** out);
void glw_diagram_free(glw_diagram* d);

/* Lexicographically least rotation, rendered in the text format. */
glw_status glw_diagram_canonical_text(const glw_diagram* d, char** out);

/* Number of chords, or -1 for a NULL handle. */
int glw_diagram_order(const glw_diagram* d);

/* Number of crossing chord pairs, or -1 for a NULL handle. */
int glw_diagram_crossings(const glw_diagram* d);

/* ---- evaluation ---- */

/* The weight polynomial W(D) in Z[c,y]. */
glw_status glw_eval(const glw_diagram* d, glw_poly** out);

/* W(D) with c set to 0 (the deframed weight system). */
glw_status glw_eval_deframed(const glw_diagram* d, glw_poly** out);

/* The Conway weight: 1 if the diagram's ribbon surface has one boundary
 * circle, else 0. */
glw_status glw_conway(const glw_diagram* d, int* out);

/* ---- polynomials ---- */

/* "c^2 - y"; "0" for the zero polynomial. */
glw_status glw_poly_text(const glw_poly* p, char** out);

/* {"terms":[{"c":2,"y":0,"k":1},...]} with terms by descending c power. */
glw_status glw_poly_json(const glw_poly* p, char** out);

void glw_poly_free(glw_poly* p);

/* ---- tables ---- */

/* All canonical diagrams of the given order with their weights, sorted by
 * diagram text.  By default only diagrams that are not connected sums are
 * listed; include_decomposable != 0 lists every diagram.  as_json == 0
 * yields CSV with header "diagram,polynomial,crossings".  order must be
 * within 0..7. */
glw_status glw_table(int order, int include_decomposable, int as_json, char** out);

/* ---- verification ---- */

/* Run a verification suite: one of "4T", "8T", "oracle", "tensor-identities",
 * "deframing", "conway", "repring", "all".  max_order <= 0 selects the
 * suite's default; algebra is "gl11" or "bosonic" (NULL means "gl11") and
 * affects the oracle suite.  *report receives the text (or JSON) report and
 * *passed 1 or 0.  Returns GLW_OK when all checks pass and
 * GLW_ERR_VERIFY_FAILED (with the report still set) when some fail. */
glw_status glw_verify(const char* suite, int max_order, const char* algebra, int as_json,
                      char** report, int* passed);

/* ---- memory ---- */

void glw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GLW_H */
