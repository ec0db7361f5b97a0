#ifndef YDCALC_H
#define YDCALC_H

/* C interface to the diagram-functional calculator.  All results come back as
 * malloc'd strings (decimal, "p/q" rationals, or JSON documents); release them
 * with ydcalc_string_free.  Functions return YDCALC_OK on success; on any
 * failure the out-parameters are untouched and ydcalc_last_error() describes
 * what went wrong for the calling thread. */

#include <stdint.h>

#if defined(__GNUC__)
#define YDCALC_API __attribute__((visibility("default")))
#else
#define YDCALC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    YDCALC_OK = 0,
    YDCALC_ERR_INVALID = 1,  /* malformed or out-of-domain input */
    YDCALC_ERR_LIMIT = 2,    /* a configured resource bound was exceeded */
    YDCALC_ERR_INTERNAL = 3  /* a structural self-check failed */
} ydcalc_status;

typedef struct ydcalc_partition ydcalc_partition;
typedef struct ydcalc_profile ydcalc_profile;
typedef struct ydcalc_graph ydcalc_graph;
typedef struct ydcalc_sum ydcalc_sum;

/* Message for the most recent failure on this thread; empty string if none.
 * The pointer stays valid until the next failing call on the same thread. */
YDCALC_API const char* ydcalc_last_error(void);

YDCALC_API void ydcalc_string_free(char* s);

/* Partitions are comma-separated weakly decreasing positive parts, e.g.
 * "4,3,1"; "" and "0" both denote the empty partition. */
YDCALC_API ydcalc_status ydcalc_partition_parse(const char* text, ydcalc_partition** out);
YDCALC_API void ydcalc_partition_free(ydcalc_partition* p);

/* Profiles are JSON: {"breakpoints": [["-3/1","3/1"], ...]} with [z, w]
 * rational pairs. */
YDCALC_API ydcalc_status ydcalc_profile_parse(const char* json_text, ydcalc_profile** out);
YDCALC_API ydcalc_status ydcalc_profile_of_partition(const ydcalc_partition* p,
                                                     ydcalc_profile** out);
YDCALC_API void ydcalc_profile_free(ydcalc_profile* p);

/* Graphs are JSON: {"white": 2, "black": 1, "edges": [[0,0],[1,0]]}. */
YDCALC_API ydcalc_status ydcalc_graph_parse(const char* json_text, ydcalc_graph** out);
YDCALC_API void ydcalc_graph_free(ydcalc_graph* g);

/* Formal sums of graphs are JSON:
 * {"terms": [{"coeff": "-1/1", "graph": {...}}, ...]}. */
YDCALC_API ydcalc_status ydcalc_sum_parse(const char* json_text, ydcalc_sum** out);
YDCALC_API void ydcalc_sum_free(ydcalc_sum* s);

/* Shape functional S_k.  Emits {"value": "p/q", "config": {...}}. */
YDCALC_API ydcalc_status ydcalc_functional(const ydcalc_partition* p, int k, char** out_json);
YDCALC_API ydcalc_status ydcalc_functional_profile(const ydcalc_profile* p, int k,
                                                   char** out_json);

/* Embedding count of a bipartite graph into a Young diagram.
 * Emits {"count": "26", "config": {...}}. */
YDCALC_API ydcalc_status ydcalc_embed_count(const ydcalc_graph* g, const ydcalc_partition* p,
                                            char** out_json);

/* Exact embedding volume of a forest on a continuous profile.
 * Emits {"volume": "p/q", "config": {...}}. */
YDCALC_API ydcalc_status ydcalc_embed_volume(const ydcalc_graph* g, const ydcalc_profile* omega,
                                             char** out_json);

/* Monte Carlo embedding volume, any graph.  Deterministic for a fixed seed
 * and thread count.  Emits {"estimate": ..., "stderr": ..., ...}. */
YDCALC_API ydcalc_status ydcalc_mc(const ydcalc_graph* g, const ydcalc_profile* omega,
                                   long long samples, uint64_t seed, int threads,
                                   char** out_json);

/* Polynomiality criterion for a formal sum.
 * Emits {"verdict": "pass", "residuals": {}, ...}. */
YDCALC_API ydcalc_status ydcalc_check_poly(const ydcalc_sum* s, char** out_json);

/* Criterion + S-basis fit + volume identity for a formal sum on a profile. */
YDCALC_API ydcalc_status ydcalc_decompose(const ydcalc_sum* s, const ydcalc_profile* omega,
                                          char** out_json);

/* Normalized character via map enumeration ("maps"), the determinantal rule
 * ("mn"), or both with a cross-check ("both").  alpha is 1 or 2; the mn rule
 * is alpha=1 only.  bound caps the face-type size for enumeration. */
YDCALC_API ydcalc_status ydcalc_character(const ydcalc_partition* mu,
                                          const ydcalc_partition* lambda, int alpha,
                                          const char* method, int bound, char** out_json);

/* Gluing enumeration for a face type; lambda (optional, may be NULL) adds the
 * signed embedding sums; list=1 dumps every gluing. */
YDCALC_API ydcalc_status ydcalc_maps(const ydcalc_partition* mu, const ydcalc_partition* lambda,
                                     int list, int bound, char** out_json);

/* Kernel scan for the polynomiality criterion over all graphs with up to
 * max_edges edges; mode is "exhaustive" or "random". */
YDCALC_API ydcalc_status ydcalc_scan(int max_edges, const char* mode, long long trials,
                                     uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* YDCALC_H */
