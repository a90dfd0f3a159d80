#ifndef EDCDS_H
#define EDCDS_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum {
  EDC_STATUS_OK = 0,
  EDC_STATUS_NULL_POINTER = 1,
  EDC_STATUS_INVALID_ARGUMENT = 2,
  EDC_STATUS_INVALID_GRAPH = 3,
  EDC_STATUS_PARSE_ERROR = 4,
  EDC_STATUS_TOO_LARGE = 5,
  EDC_STATUS_PANIC = 6,
} EdcStatus;

/**
 * Values accepted by [`edc_ds`].
 */
typedef enum {
  EDC_DS_ALGORITHM_BASIC = 0,
  EDC_DS_ALGORITHM_IMPROVED = 1,
  EDC_DS_ALGORITHM_GREEDY = 2,
} EdcDsAlgorithm;

/**
 * Values accepted by [`edc_cds`].
 */
typedef enum {
  /**
   * EDC connection stage over the improved dominating set.
   */
  EDC_CDS_ALGORITHM_EDC = 0,
  /**
   * EDC connection stage over the basic dominating set.
   */
  EDC_CDS_ALGORITHM_EDC_FROM_BASIC = 1,
  EDC_CDS_ALGORITHM_WU_LI = 2,
  EDC_CDS_ALGORITHM_GREEDY = 3,
} EdcCdsAlgorithm;

/**
 * Opaque graph handle.
 */
typedef struct EdcGraph EdcGraph;

/**
 * Opaque sorted list of node ids.
 */
typedef struct EdcNodeSet EdcNodeSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. Valid until the next call into this library.
 */
const char *edc_last_error_message(void);

/**
 * Builds a graph on `n` nodes from `edge_count` pairs stored flat in `edges`
 * (`u0, v0, u1, v1, ...`). Duplicates collapse; self-loops and ids `>= n`
 * fail with `EDC_STATUS_INVALID_GRAPH`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable `uint32_t` values (it may
 * be NULL when `edge_count` is 0) and `out` must be writable.
 */
EdcStatus edc_graph_new(size_t n, const uint32_t *edges, size_t edge_count, EdcGraph **out);

/**
 * Samples a unit-disk graph with `n` nodes in a square of side `area_side`.
 *
 * # Safety
 * `out` must be writable.
 */
EdcStatus edc_graph_generate_udg(size_t n,
                                 double radius,
                                 double area_side,
                                 uint64_t seed,
                                 EdcGraph **out);

/**
 * Parses a NUL-terminated graph JSON document.
 *
 * # Safety
 * `json` must be a valid C string and `out` must be writable.
 */
EdcStatus edc_graph_from_json(const char *json, EdcGraph **out);

/**
 * Releases a graph. NULL is ignored.
 *
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void edc_graph_free(EdcGraph *graph);

/**
 * Node count, 0 for NULL.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
size_t edc_graph_node_count(const EdcGraph *graph);

/**
 * Edge count, 0 for NULL.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
size_t edc_graph_edge_count(const EdcGraph *graph);

/**
 * Computes a dominating set. `algorithm` is an `EdcDsAlgorithm` value.
 *
 * # Safety
 * `graph` must be a live handle and `out` must be writable.
 */
EdcStatus edc_ds(const EdcGraph *graph, uint32_t algorithm, EdcNodeSet **out);

/**
 * Computes a connected dominating set of every component. `algorithm` is an
 * `EdcCdsAlgorithm` value.
 *
 * # Safety
 * `graph` must be a live handle and `out` must be writable.
 */
EdcStatus edc_cds(const EdcGraph *graph, uint32_t algorithm, EdcNodeSet **out);

/**
 * Exact minimum dominating set (or, if `connected` is true, minimum
 * connected dominating set). Graphs above the exact-search limit fail with
 * `EDC_STATUS_TOO_LARGE`.
 *
 * # Safety
 * `graph` must be a live handle and `out` must be writable.
 */
EdcStatus edc_min_exact(const EdcGraph *graph, bool connected, EdcNodeSet **out);

/**
 * Writes whether `nodes` dominates the graph (per component and connected
 * within each component when `connected` is true).
 *
 * # Safety
 * `nodes` must point to `len` readable ids (NULL allowed when `len` is 0),
 * `graph` must be a live handle and `result` must be writable.
 */
EdcStatus edc_check_set(const EdcGraph *graph,
                        const uint32_t *nodes,
                        size_t len,
                        bool connected,
                        bool *result);

/**
 * Number of ids in the set, 0 for NULL.
 *
 * # Safety
 * `set` must be NULL or a live handle.
 */
size_t edc_node_set_len(const EdcNodeSet *set);

/**
 * Sorted ids, valid while the set is alive. NULL for an empty or NULL set.
 *
 * # Safety
 * `set` must be NULL or a live handle.
 */
const uint32_t *edc_node_set_data(const EdcNodeSet *set);

/**
 * Releases a node set. NULL is ignored.
 *
 * # Safety
 * `set` must come from this library and not be used afterwards.
 */
void edc_node_set_free(EdcNodeSet *set);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDCDS_H */
