/*
 * C interface to the codeword-stabilized code search library.
 *
 * Objects are opaque handles created by cws_*_create/parse/search functions
 * and released with the matching *_free function. Every fallible call
 * returns a cws_status; on failure cws_last_error() describes the problem
 * for the calling thread. Strings returned through char** are owned by the
 * caller and released with cws_string_free.
 *
 * Bit strings are written with qubit 1 leftmost: "10100" flips qubits 1, 3.
 */
#ifndef CWS_CWS_H
#define CWS_CWS_H

#include <stddef.h>
#include <stdint.h>

#if defined(CWS_BUILDING_LIBRARY)
#define CWS_API __attribute__((visibility("default")))
#else
#define CWS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cws_status {
  CWS_OK = 0,
  CWS_ERR_INVALID_INPUT = 1,
  CWS_ERR_ISOLATED_VERTEX = 2,
  CWS_ERR_RESOURCE_LIMIT = 3,
  CWS_ERR_PARSE = 4,
  CWS_ERR_NULL_ARGUMENT = 5,
  CWS_ERR_INTERNAL = 6
} cws_status;

typedef struct cws_graph cws_graph;
typedef struct cws_code cws_code;
typedef struct cws_search_result cws_search_result;
typedef struct cws_verify_report cws_verify_report;

CWS_API const char* cws_version(void);
CWS_API const char* cws_last_error(void);
CWS_API const char* cws_status_name(cws_status status);
CWS_API void cws_string_free(char* s);

/* Maximum codeword count for a distance-2 code on n qubits. */
CWS_API cws_status cws_rains_kmax(int n, uint64_t* out);

/* ---- graphs ---------------------------------------------------------- */

CWS_API cws_status cws_graph_cycle(int n, cws_graph** out);
CWS_API cws_status cws_graph_random(int n, double edge_probability, uint64_t seed,
                                    cws_graph** out);
/* Text: "n=<count>" then "<i> <j>" records separated by newlines or ';'. */
CWS_API cws_status cws_graph_parse_edge_list(const char* text, cws_graph** out);
/* "cycle:<n>", "random:<n>,<p>" (uses seed) or "edges:<path>". */
CWS_API cws_status cws_graph_from_spec(const char* spec, uint64_t seed, cws_graph** out);
CWS_API void cws_graph_free(cws_graph* g);

CWS_API int cws_graph_vertex_count(const cws_graph* g);
CWS_API size_t cws_graph_edge_count(const cws_graph* g);
CWS_API cws_status cws_graph_to_edge_list(const cws_graph* g, char** out);
/* Row k (1-indexed) of the adjacency matrix as an n-character string. */
CWS_API cws_status cws_graph_neighbor_mask(const cws_graph* g, int k, char** out);

/* ---- codes ----------------------------------------------------------- */

/* Whitespace/newline separated n-bit words, '#' comments. */
CWS_API cws_status cws_code_parse(int n, const char* text, cws_code** out);
CWS_API void cws_code_free(cws_code* c);
CWS_API size_t cws_code_size(const cws_code* c);
/* Writes word `index` (n characters plus NUL) into buf of at least n+1 bytes. */
CWS_API cws_status cws_code_word(const cws_code* c, size_t index, char* buf, size_t buf_len);

/* ---- search ---------------------------------------------------------- */

typedef void (*cws_progress_fn)(uint64_t attempts_done, uint64_t disjointness_passes,
                                void* user_data);

typedef struct cws_search_config {
  uint64_t master_seed;
  uint64_t max_attempts;
  uint64_t target_k;    /* 0 selects the bound for n */
  uint32_t workers;     /* attempt-level threads, >= 1 */
  uint64_t node_budget; /* per attempt; 0 selects the default */
  uint64_t progress_interval;
  cws_progress_fn progress;
  void* progress_user_data;
} cws_search_config;

CWS_API void cws_search_config_init(cws_search_config* config);

/* Returns CWS_OK whether or not a code was found; see cws_search_found. */
CWS_API cws_status cws_search(const cws_graph* g, const cws_search_config* config,
                              cws_search_result** out);
CWS_API void cws_search_result_free(cws_search_result* r);
CWS_API int cws_search_found(const cws_search_result* r);
CWS_API uint64_t cws_search_target_k(const cws_search_result* r);
CWS_API uint64_t cws_search_attempts_used(const cws_search_result* r);
CWS_API uint64_t cws_search_disjointness_passes(const cws_search_result* r);
CWS_API uint64_t cws_search_nodes_explored(const cws_search_result* r);
CWS_API double cws_search_elapsed_seconds(const cws_search_result* r);
/* Copy of the found code; CWS_ERR_INVALID_INPUT when nothing was found. */
CWS_API cws_status cws_search_code(const cws_search_result* r, cws_code** out);
/* Certificate JSON with both checks recomputed. Requires a found code. */
CWS_API cws_status cws_search_certificate_json(const cws_search_result* r, char** out);

/* ---- verification ---------------------------------------------------- */

CWS_API cws_status cws_verify_code(const cws_graph* g, const cws_code* c,
                                   cws_verify_report** out);
/* Fails with CWS_ERR_INVALID_INPUT / CWS_ERR_PARSE on a malformed or
 * inconsistent certificate (e.g. duplicate codewords). */
CWS_API cws_status cws_verify_certificate_json(const char* json, cws_verify_report** out);
CWS_API void cws_verify_report_free(cws_verify_report* r);
/* 1 iff both verifiers pass (and recorded verdicts, if any, are current). */
CWS_API int cws_verify_pass(const cws_verify_report* r);
CWS_API int cws_verify_classical_pass(const cws_verify_report* r);
/* 1 pass, 0 fail, -1 oracle unavailable for this size. */
CWS_API int cws_verify_oracle_pass(const cws_verify_report* r);
/* Human-readable multi-line summary, valid until the report is freed. */
CWS_API const char* cws_verify_describe(const cws_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* CWS_CWS_H */
