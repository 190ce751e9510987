#ifndef ISOGAME_H
#define ISOGAME_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IsoMover {
  ISO_MOVER_DOMINATOR = 0,
  ISO_MOVER_STALLER = 1,
} IsoMover;

typedef enum IsoStatus {
  ISO_STATUS_OK = 0,
  ISO_STATUS_NULL_POINTER = 1,
  ISO_STATUS_INVALID_ARGUMENT = 2,
  ISO_STATUS_ORDER_TOO_LARGE = 3,
  ISO_STATUS_BAD_EDGE = 4,
  ISO_STATUS_MALFORMED_GRAPH6 = 5,
  ISO_STATUS_BAD_SPEC = 6,
  ISO_STATUS_PATTERN_TOO_LARGE = 7,
  ISO_STATUS_ILLEGAL_MOVE = 8,
  ISO_STATUS_TERMINAL_STATE = 9,
  ISO_STATUS_BUDGET_EXCEEDED = 10,
  ISO_STATUS_BUFFER_TOO_SMALL = 11,
  ISO_STATUS_PANIC = 12,
} IsoStatus;

/**
 * Opaque forbidden-family handle.
 */
typedef struct IsoFamily IsoFamily;

/**
 * Opaque graph handle.
 */
typedef struct IsoGraph IsoGraph;

/**
 * Outcome of [`iso_solve`]. `best_move` is -1 when the start is terminal.
 */
typedef struct IsoSolveResult {
  size_t value;
  int64_t best_move;
  size_t line_len;
} IsoSolveResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 record into a new graph handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IsoStatus iso_graph_from_graph6(const char *text, struct IsoGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (it may be null when
 * `edge_count` is 0) and `out` must be valid.
 */
enum IsoStatus iso_graph_from_edges(size_t n,
                                    const size_t *edges,
                                    size_t edge_count,
                                    struct IsoGraph **out);

/**
 * Builds a named family graph such as `cycle:6` or `hgraph`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IsoStatus iso_graph_from_family(const char *spec, struct IsoGraph **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t iso_graph_order(const struct IsoGraph *g);

/**
 * Encodes `g` as graph6. Release the string with [`iso_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum IsoStatus iso_graph_to_graph6(const struct IsoGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void iso_string_free(char *s);

/**
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void iso_graph_free(struct IsoGraph *g);

/**
 * Parses a forbidden family: `K1`, `K2`, `P3`, `none` or
 * `custom:<n>:<u-v,...>`, several joined by `;`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IsoStatus iso_family_parse(const char *spec, struct IsoFamily **out);

/**
 * # Safety
 * `f` must be null or a handle not yet freed.
 */
void iso_family_free(struct IsoFamily *f);

/**
 * Solves the game on `g` from the closure of `initial_marks` (bit v =
 * vertex v). `memo_cap` 0 selects the default cap.
 *
 * `result` is always filled on success. The principal line is copied
 * into `line` when `line_capacity >= result.line_len`; otherwise the call
 * returns `BufferTooSmall` with `result` still filled so the caller can
 * retry with a larger buffer.
 *
 * # Safety
 * `g` and `f` must be live handles, `result` valid, and `line` must point
 * to `line_capacity` writable values (or be null when it is 0).
 */
enum IsoStatus iso_solve(const struct IsoGraph *g,
                         const struct IsoFamily *f,
                         enum IsoMover start,
                         uint64_t initial_marks,
                         size_t memo_cap,
                         struct IsoSolveResult *result,
                         size_t *line,
                         size_t line_capacity);

/**
 * Minimum F-isolating set size and its lexicographically least witness
 * (as a bitmask). Supports order up to 24.
 *
 * # Safety
 * `g` and `f` must be live handles; `size` and `witness` valid pointers.
 */
enum IsoStatus iso_isolation_number(const struct IsoGraph *g,
                                    const struct IsoFamily *f,
                                    size_t *size,
                                    uint64_t *witness);

/**
 * Message for the most recent failure on this thread, or "" after a
 * success. Valid until the next call into this library on the same thread.
 */
const char *iso_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISOGAME_H */
