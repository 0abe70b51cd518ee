/* sepscope — graph containment and minimal-separator toolkit.
 *
 * C API over the C++ core: opaque graph handles, status codes, and
 * NUL-terminated strings allocated by the library (free with
 * ss_string_free). Failing calls return a nonzero ss_status and set a
 * thread-local message retrievable via ss_last_error().
 */
#ifndef SEPSCOPE_H
#define SEPSCOPE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SEPSCOPE_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SEPSCOPE_API __attribute__((visibility("default")))
#else
#define SEPSCOPE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ss_graph ss_graph;

typedef enum ss_status {
    SS_OK = 0,
    SS_ERR_INVALID_ARGUMENT = 1, /* bad parameter, loop edge, out-of-range vertex */
    SS_ERR_PARSE = 2,            /* malformed graph6 / edge-list text */
    SS_ERR_CAPABILITY = 3,       /* instance exceeds a hard size cap */
    SS_ERR_BUDGET = 4,           /* search budget exhausted, no answer */
    SS_ERR_CONSTRUCTION = 5,     /* family axiom violated */
    SS_ERR_INTERNAL = 6
} ss_status;

SEPSCOPE_API const char* ss_version(void);

/* Message for the most recent failing call on this thread. */
SEPSCOPE_API const char* ss_last_error(void);

SEPSCOPE_API void ss_string_free(char* s);
SEPSCOPE_API void ss_graph_free(ss_graph* g);

/* ---- construction and serialization ---- */

/* endpoints: 2*edge_count ints, pairs (u,v). */
SEPSCOPE_API ss_status ss_graph_from_edge_list(int n, const int* endpoints, size_t edge_count, ss_graph** out);

/* format: "graph6" | "edgelist" | "auto". */
SEPSCOPE_API ss_status ss_graph_parse(const char* text, const char* format, ss_graph** out);
SEPSCOPE_API ss_status ss_graph_encode(const ss_graph* g, const char* format, char** out_text);

/* DOT export; when witness_text (a witness produced by this library) is
 * non-NULL its vertices are highlighted. */
SEPSCOPE_API ss_status ss_graph_to_dot(const ss_graph* g, const char* witness_text, char** out_text);

SEPSCOPE_API int ss_graph_order(const ss_graph* g);
SEPSCOPE_API int ss_graph_size(const ss_graph* g);

/* "house", "diamond", "butterfly", "gem", "paw", "claw", "2p2", "p7", "c6",
 * "k4", "k2,3", ... */
SEPSCOPE_API ss_status ss_graph_named(const char* name, ss_graph** out);

/* family: "theta" [k] | "prism" [k] | "skinny-ladder" [k] | "gamma" [i j k]
 * | "twin-wheel" [hole_length] | "creature" [k a_size b_size x_clique y_clique]. */
SEPSCOPE_API ss_status ss_generate(const char* family, const int* params, size_t n_params, ss_graph** out);

/* counts: one non-negative subdivision count per edge of g, in the order of
 * the graph's sorted edge list. */
SEPSCOPE_API ss_status ss_subdivide(const ss_graph* g, const int* counts, size_t n_counts, ss_graph** out);

/* Exact isomorphism test (capped at 12 vertices). */
SEPSCOPE_API ss_status ss_isomorphic(const ss_graph* a, const ss_graph* b, int* out_isomorphic);

/* ---- minimal separators ---- */

/* cap < 0: unlimited. When the count exceeds the cap, *out_capped is set and
 * *out_count holds cap+1. */
SEPSCOPE_API ss_status ss_minsep_count(const ss_graph* g, long long cap, long long* out_count, int* out_capped);

/* One separator per line, sorted members in braces. */
SEPSCOPE_API ss_status ss_minsep_list(const ss_graph* g, long long cap, char** out_text, int* out_capped);

/* ---- recognition ---- */

/* pattern: "house-im" | "house-itm" | "butterfly-im" | "2p2-itm".
 * On a positive verdict, when out_witness is non-NULL it receives the
 * witness in the library text format. */
SEPSCOPE_API ss_status ss_recognize(const ss_graph* g, const char* pattern, long long budget, int* out_present,
                                    char** out_witness);

/* relation: "induced-subgraph" | "induced-minor" | "induced-topological-minor".
 * Desk-scale exhaustive oracle; capability error above its caps. */
SEPSCOPE_API ss_status ss_oracle_contains(const ss_graph* host, const ss_graph* pattern, const char* relation,
                                          int* out_present, char** out_witness);

SEPSCOPE_API ss_status ss_oracle_fvs(const ss_graph* g, int* out_fvs);

/* relation: "induced-minor" | "induced-topological-minor" (or "im"/"itm"). */
SEPSCOPE_API ss_status ss_classify(const ss_graph* pattern, const char* relation, int* out_tame,
                                   char** out_justification);

/* ---- experiments (CSV text; byte-stable for equal parameters) ---- */

SEPSCOPE_API ss_status ss_experiment_feral_growth(const char* family, int k_min, int k_max, long long cap,
                                                  uint64_t seed, char** out_csv, char** out_log, int* out_ok);

SEPSCOPE_API ss_status ss_experiment_tame_profile(const char* filter, int n_min, int n_max, int samples,
                                                  uint64_t seed, long long budget, long long cap, char** out_csv,
                                                  char** out_log);

SEPSCOPE_API ss_status ss_experiment_oracle_equivalence(int exhaustive_n, int random_n_min, int random_n_max,
                                                        int samples, uint64_t seed, long long budget,
                                                        char** out_csv, char** out_log, int* out_ok);

SEPSCOPE_API ss_status ss_experiment_dichotomy_table(char** out_csv, char** out_log, int* out_ok);

#ifdef __cplusplus
}
#endif

#endif /* SEPSCOPE_H */
