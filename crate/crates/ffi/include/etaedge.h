#ifndef ETAEDGE_H
#define ETAEDGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes of the C API.
 */
typedef enum EtaStatus {
  ETA_STATUS_OK = 0,
  ETA_STATUS_NULL_ARGUMENT = 1,
  ETA_STATUS_MALFORMED = 2,
  ETA_STATUS_INVALID_GRAPH = 3,
  ETA_STATUS_PRECONDITION = 4,
  ETA_STATUS_NOT_REGULAR = 5,
  ETA_STATUS_IMPROPER = 6,
  ETA_STATUS_BUDGET_EXHAUSTED = 7,
  ETA_STATUS_NOT_FOUND = 8,
  ETA_STATUS_BUFFER_TOO_SMALL = 9,
  ETA_STATUS_INTERNAL = 10,
} EtaStatus;

/**
 * Opaque edge-coloring handle.
 */
typedef struct EtaColoring EtaColoring;

/**
 * Opaque graph handle.
 */
typedef struct EtaGraph EtaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy of the last error message on this thread, or NULL. Release with
 * [`eta_string_free`].
 */
char *eta_last_error(void);

void eta_string_free(char *s);

/**
 * Parses a NUL-terminated graph6 string.
 */
enum EtaStatus eta_graph_from_graph6(const char *text, struct EtaGraph **out);

/**
 * Builds a graph on `n` vertices from `m` pairs stored as
 * `pairs[2i], pairs[2i+1]`. Edge `i` gets id `i`.
 */
enum EtaStatus eta_graph_from_edges(size_t n, const size_t *pairs, size_t m, struct EtaGraph **out);

/**
 * Generates a named family (`"cycle"`, `"complete"`, `"complete_bipartite"`,
 * `"hypercube"`, `"petersen"`, `"heawood"`).
 */
enum EtaStatus eta_graph_generate(const char *family,
                                  const size_t *params,
                                  size_t nparams,
                                  struct EtaGraph **out);

void eta_graph_free(struct EtaGraph *g);

/**
 * 0 for NULL.
 */
size_t eta_graph_vertex_count(const struct EtaGraph *g);

/**
 * 0 for NULL.
 */
size_t eta_graph_edge_count(const struct EtaGraph *g);

/**
 * Girth, or 0 for a forest.
 */
enum EtaStatus eta_graph_girth(const struct EtaGraph *g, size_t *out);

/**
 * graph6 encoding; NULL if `g` is NULL. Release with [`eta_string_free`].
 */
char *eta_graph_to_graph6(const struct EtaGraph *g);

/**
 * A coloring of `g` with `labels[e]` on edge `e` (`m` must equal the edge
 * count) drawn from the `k` labels in `universe`.
 */
enum EtaStatus eta_coloring_new(const struct EtaGraph *g,
                                const uint64_t *labels,
                                size_t m,
                                const uint64_t *universe,
                                size_t k,
                                struct EtaColoring **out);

void eta_coloring_free(struct EtaColoring *c);

/**
 * Number of labeled edges; 0 for NULL.
 */
size_t eta_coloring_len(const struct EtaColoring *c);

/**
 * Copies the labels into `buf`, which must hold `eta_coloring_len(c)` values.
 */
enum EtaStatus eta_coloring_labels(const struct EtaColoring *c, uint64_t *buf, size_t cap);

/**
 * Proper coloring with at most Δ+1 labels.
 */
enum EtaStatus eta_proper_color(const struct EtaGraph *g, struct EtaColoring **out);

/**
 * Additivity check. `violation` (optional, two entries) receives the
 * smallest incident pair with equal neighbor sums, or `SIZE_MAX` twice.
 */
enum EtaStatus eta_verify_additive(const struct EtaGraph *g,
                                   const struct EtaColoring *c,
                                   bool require_proper,
                                   bool *ok,
                                   size_t *violation);

enum EtaStatus eta_is_spaced(const struct EtaGraph *g, const struct EtaColoring *c, bool *out);

enum EtaStatus eta_spaced_to_additive(const struct EtaGraph *g,
                                      const struct EtaColoring *c,
                                      struct EtaColoring **out);

/**
 * Resistance of a regular graph. `witness` may be NULL.
 */
enum EtaStatus eta_resistance(const struct EtaGraph *g,
                              uint64_t budget,
                              size_t *out,
                              struct EtaColoring **witness);

/**
 * Writes `A_n` into `buf` (capacity `cap`) and its size into `len`. With
 * a too small buffer only `len` is set.
 */
enum EtaStatus eta_build_an(uint32_t n, uint64_t *buf, size_t cap, size_t *len);

/**
 * Label bounds for d-regular graphs: `max(A_n)` and the (d+1)-th element.
 */
enum EtaStatus eta_bound(uint64_t d, uint64_t *paper_bound, uint64_t *refined_bound);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ETAEDGE_H */
