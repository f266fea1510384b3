#ifndef FLIP_FLIP_H
#define FLIP_FLIP_H

/*
 * C interface to the flipping-puzzle engine (lit-only sigma-game on a path
 * plus one vertex).
 *
 * Conventions:
 *  - Vertices are 1-based: s_1 .. s_n.
 *  - Configurations are NUL-terminated bitstrings of length n, leftmost
 *    character = s_1 ("10001").
 *  - Every function returns a flip_status. On failure a message is available
 *    from flip_last_error() (thread-local, valid until the next call on the
 *    same thread).
 *  - Strings returned through char** are heap-allocated JSON documents owned
 *    by the caller and released with flip_string_free().
 *  - A cap argument <= 0 means "use the default brute-force cap" (20, or the
 *    FLIP_ORACLE_CAP environment variable).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define FLIP_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define FLIP_API __attribute__((visibility("default")))
#else
#  define FLIP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum flip_status {
  FLIP_OK = 0,
  FLIP_E_N_BELOW_TWO = 1,
  FLIP_E_EMPTY_ATTACH = 2,
  FLIP_E_ATTACH_OUT_OF_RANGE = 3,
  FLIP_E_VERTEX_OUT_OF_RANGE = 4,
  FLIP_E_ILLEGAL_MOVE = 5,
  FLIP_E_BAD_CONFIG = 6,
  FLIP_E_PARSE = 7,
  FLIP_E_CAP_EXCEEDED = 8,
  FLIP_E_INVALID_ARGUMENT = 9,
  FLIP_E_BUFFER_TOO_SMALL = 10,
  FLIP_E_INTERNAL = 11
} flip_status;

/* Validated graph together with its precomputed basis data. Immutable;
 * safe to share between threads. */
typedef struct flip_graph flip_graph;

FLIP_API const char* flip_status_name(flip_status status);
FLIP_API const char* flip_last_error(void);
FLIP_API void flip_string_free(char* s);
FLIP_API int flip_default_oracle_cap(void);

/* ---- graphs ---------------------------------------------------------- */

FLIP_API flip_status flip_graph_create(int n, const int* attach, size_t attach_len, flip_graph** out);
/* "n=5 attach=1,4" or {"n":5,"attach":[1,4]} */
FLIP_API flip_status flip_graph_parse(const char* text, flip_graph** out);
FLIP_API void flip_graph_destroy(flip_graph* g);
FLIP_API int flip_graph_n(const flip_graph* g);
FLIP_API int flip_graph_pi1_size(const flip_graph* g);
/* Sorted attach list; copies min(len, m) entries and stores m in *m_out. */
FLIP_API flip_status flip_graph_attach(const flip_graph* g, int* attach, size_t len, size_t* m_out);
/* Neighbors of vertex v as a JSON array. */
FLIP_API flip_status flip_neighbors(const flip_graph* g, int v, char** json_out);

/* ---- moves ----------------------------------------------------------- */

/* out must hold n+1 bytes. strict != 0 rejects white vertices with
 * FLIP_E_ILLEGAL_MOVE; otherwise a white vertex leaves the config unchanged. */
FLIP_API flip_status flip_apply_move(const flip_graph* g, const char* config, int vertex, int strict, char* out,
                                     size_t out_len);
FLIP_API flip_status flip_hamming_weight(const flip_graph* g, const char* config, int* out);

/* ---- classification -------------------------------------------------- */

/* {"side","weights","trivial","config","simple_coords","simple_weight","hamming_weight"} */
FLIP_API flip_status flip_classify(const flip_graph* g, const char* config, char** json_out);
FLIP_API flip_status flip_reachable(const flip_graph* g, const char* from, const char* to, int* out);
FLIP_API flip_status flip_pi_report(const flip_graph* g, char** json_out);
/* {"orbits":[{side,weights,trivial,size,min_weight}],"orbit_count","max_orbit_weight",...} */
FLIP_API flip_status flip_orbits_report(const flip_graph* g, char** json_out);
FLIP_API flip_status flip_orbit_count(const flip_graph* g, int* out);
FLIP_API flip_status flip_max_orbit_weight(const flip_graph* g, int* out);

/* ---- brute force ----------------------------------------------------- */

/* Shortest strict move sequence. *found = 0 when unreachable, in which case
 * *moves is NULL. Release moves with flip_moves_free. */
FLIP_API flip_status flip_find_witness(const flip_graph* g, const char* from, const char* to, int cap, int* found,
                                       int** moves, size_t* moves_len);
FLIP_API void flip_moves_free(int* moves);
/* {"moves":[...],"length":k} or {"moves":null} when unreachable. */
FLIP_API flip_status flip_solve(const flip_graph* g, const char* from, const char* to, int cap, char** json_out);
FLIP_API flip_status flip_group_order(const flip_graph* g, uint64_t max_elements, uint64_t* out);
FLIP_API flip_status flip_verify_graph(const flip_graph* g, int cap, char** json_out);

/* Called once per graph, in sweep order, with a JSON report line. */
typedef void (*flip_report_callback)(const char* json_line, void* user);
/* Summary {"graphs","failures","failed":[...]} */
FLIP_API flip_status flip_sweep(int n_max, int jobs, int cap, flip_report_callback cb, void* user,
                                char** summary_json);

FLIP_API flip_status flip_forms_report(const flip_graph* g, int cap, char** json_out);

/* ---- HTTP facade ----------------------------------------------------- */

/* Routes one request of the JSON API; target may carry a ?query. */
FLIP_API flip_status flip_api_request(const char* method, const char* target, const char* body, int witness_cap,
                                      int* http_status, char** body_out);

#ifdef __cplusplus
}
#endif

#endif /* FLIP_FLIP_H */
