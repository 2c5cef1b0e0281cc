#ifndef RHOMBIFLIP_H
#define RHOMBIFLIP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* JSON payloads cross this boundary as UTF-8 strings.  Every char* the
 * library hands out is heap allocated and must be released with
 * rf_string_free.  Functions return RF_OK on success; on failure the
 * thread-local message from rf_last_error describes what went wrong. */

typedef enum rf_status {
    RF_OK = 0,
    RF_ERR_INVALID = 1,        /* structurally bad input */
    RF_ERR_PARSE = 2,          /* malformed JSON or word text */
    RF_ERR_NOT_APPLICABLE = 3, /* move requested where it does not apply */
    RF_ERR_LIMIT = 4,          /* a configured budget was exhausted */
    RF_ERR_NOT_FOUND = 5,      /* search completed with no result */
    RF_ERR_INTERNAL = 6
} rf_status;

#define RF_MAX_N 16

const char* rf_version(void);
const char* rf_last_error(void);
void rf_string_free(char* s);

/* ---- planar tilings ---- */

typedef struct rf_tiling rf_tiling;

typedef struct rf_flip {
    int axes[3];            /* ascending */
    int dir;                /* 0 = up, 1 = down */
    int base[RF_MAX_N];     /* 0/1 per axis, axes beyond n must be 0 */
} rf_flip;

rf_status rf_tiling_base(int n, rf_tiling** out);
rf_status rf_tiling_from_json(const char* json, rf_tiling** out);
rf_status rf_tiling_to_json(const rf_tiling* t, char** out);
int rf_tiling_n(const rf_tiling* t);
rf_status rf_tiling_is_valid(const rf_tiling* t);
rf_status rf_tiling_flips(const rf_tiling* t, rf_flip** out, size_t* count);
rf_status rf_tiling_apply_flip(const rf_tiling* t, const rf_flip* f, rf_tiling** out);
void rf_flips_free(rf_flip* flips);
void rf_tiling_free(rf_tiling* t);

/* ---- flip graph ---- */

typedef struct rf_graph rf_graph;

/* vertex_limit 0 means unlimited; jobs < 1 behaves like 1.  When the limit
 * cuts enumeration short the call still returns RF_ERR_LIMIT but *out holds
 * the partial graph. */
rf_status rf_graph_enumerate(int n, size_t vertex_limit, int jobs, rf_graph** out);
rf_status rf_graph_from_json(const char* json, rf_graph** out);
rf_status rf_graph_to_json(const rf_graph* g, char** out);
size_t rf_graph_vertex_count(const rf_graph* g);
size_t rf_graph_edge_count(const rf_graph* g);
int rf_graph_is_complete(const rf_graph* g);
rf_status rf_graph_is_connected(const rf_graph* g, int* connected);
void rf_graph_free(rf_graph* g);

/* ---- words and rewriting ---- */

typedef struct rf_word rf_word;

rf_status rf_word_parse(int n, const char* text, rf_word** out);
rf_status rf_word_format(const rf_word* w, char** out);
rf_status rf_word_free_reduce(const rf_word* w, rf_word** out);
size_t rf_word_length(const rf_word* w);
void rf_word_free(rf_word* w);

/* path json -> word text */
rf_status rf_path_to_word(const char* path_json, char** word_text);

/* closed path report: JSON with "certificate" (nullable) and "reduction" */
rf_status rf_check_closed_path(const char* path_json, size_t max_states, char** report_json);

/* triple = {i,j,k} ascending; fword_text gets the invariant as text */
rf_status rf_mn_invariant(const rf_word* w, const int triple[3], char** fword_text);
/* certificate JSON, or RF_ERR_NOT_FOUND when every triple is trivial */
rf_status rf_mn_certify(const rf_word* w, char** certificate_json);
rf_status rf_mn_length_lower_bound(const rf_word* w, size_t* bound);

/* result: 1 equal, 0 unknown; witness_json gets the move list when equal */
rf_status rf_words_bounded_equal(const rf_word* a, const rf_word* b, size_t max_states,
                                 size_t extra_len, int* equal, char** witness_json);

/* ---- surfaces ---- */

typedef struct rf_surface rf_surface;

/* kind: 0 = rp2, 1 = klein; labels may be NULL for the identity labeling */
rf_status rf_surface_glue(const char* tiling_json, const int* labels, int kind, rf_surface** out);
rf_status rf_surface_from_json(const char* json, rf_surface** out);
rf_status rf_surface_to_json(const rf_surface* s, char** out);
rf_status rf_surface_euler_characteristic(const rf_surface* s, int* chi);
rf_status rf_surface_flip_count(const rf_surface* s, size_t* count);
/* outcome JSON {"path","word","certificate","states_explored"}, or
 * RF_ERR_NOT_FOUND when no certified closed path exists within max_len */
rf_status rf_surface_search(int n, int kind, int max_len, char** outcome_json);
void rf_surface_free(rf_surface* s);

/* ---- cluster mutation ---- */

/* path_json as for rf_check_closed_path; vars_json maps "x/y" keys to
 * rational values.  result_json gets the transported assignment. */
rf_status rf_mutate_along_path(const char* path_json, const char* vars_json, char** result_json);

/* ---- rendering ---- */

rf_status rf_render_svg(const char* tiling_json, int with_tiling, int with_dual, int with_labels,
                        char** svg);

#ifdef __cplusplus
}
#endif

#endif /* RHOMBIFLIP_H */
