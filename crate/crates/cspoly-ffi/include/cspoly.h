#ifndef CSPOLY_H
#define CSPOLY_H

/* Generated by cbindgen; edit src/lib.rs instead of this file. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every API call.
 */
typedef enum {
  CSPOLY_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CSPOLY_STATUS_NULL_ARGUMENT = 1,
  /**
   * Arguments were structurally invalid (wrong length, bad dimension).
   */
  CSPOLY_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The expression or file content did not parse.
   */
  CSPOLY_STATUS_PARSE_ERROR = 3,
  /**
   * The computation itself failed (degenerate input, guard exceeded).
   */
  CSPOLY_STATUS_COMPUTATION_ERROR = 4,
  /**
   * The operation requires a centrally symmetric polytope.
   */
  CSPOLY_STATUS_NOT_CENTRALLY_SYMMETRIC = 5,
} CspolyStatus;

/**
 * Opaque polytope handle: the exact vertex data plus lazily computed
 * lattice and flag data, so repeated queries do not recompute.
 */
typedef struct CspolyPolytope CspolyPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *cspoly_last_error_message(void);

/**
 * Build a polytope from a constructor expression such as
 * `slab(cube(4); 1 1 1 1; -2; 2)`.
 *
 * # Safety
 * `expr` must be a valid NUL-terminated string and `out` a valid pointer.
 */
CspolyStatus cspoly_polytope_build(const char *expr, CspolyPolytope **out);

/**
 * Parse a polytope from the vertex text format (`d n` header plus `n`
 * rows of `d` rationals).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
CspolyStatus cspoly_polytope_from_text(const char *text, CspolyPolytope **out);

/**
 * Release a polytope handle. Null is ignored.
 *
 * # Safety
 * `p` must come from a cspoly constructor and not be freed twice.
 */
void cspoly_polytope_free(CspolyPolytope *p);

/**
 * Ambient dimension of the coordinate space.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_ambient_dim(const CspolyPolytope *p, uintptr_t *out);

/**
 * Intrinsic (affine-hull) dimension.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_dim(const CspolyPolytope *p, uintptr_t *out);

/**
 * Number of vertices.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_vertex_count(const CspolyPolytope *p, uintptr_t *out);

/**
 * Number of facets.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_facet_count(const CspolyPolytope *p, uintptr_t *out);

/**
 * Whether the polytope is centrally symmetric (`P = -P` exactly).
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_is_centrally_symmetric(const CspolyPolytope *p, bool *out);

/**
 * Fill `buf` (of length `len`, which must equal the intrinsic dimension)
 * with the f-vector `f_0, ..., f_{d-1}`.
 *
 * # Safety
 * `p` must be a live handle; `buf` must point to `len` writable entries.
 */
CspolyStatus cspoly_polytope_f_vector(const CspolyPolytope *p, uint64_t *buf, uintptr_t len);

/**
 * Total number of non-empty faces `s(P)`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_s_value(const CspolyPolytope *p, uint64_t *out);

/**
 * Chain count `f_S` for the strictly increasing dimension set
 * `dims[0..ndims]`.
 *
 * # Safety
 * `p` must be a live handle; `dims` must point to `ndims` entries; `out`
 * must be valid.
 */
CspolyStatus cspoly_polytope_flag_count(const CspolyPolytope *p,
                                        const uintptr_t *dims,
                                        uintptr_t ndims,
                                        uint64_t *out);

/**
 * The toric `g_2` (an exact integer; requires dimension >= 3).
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_g2_toric(const CspolyPolytope *p, int64_t *out);

/**
 * The 4-dimensional functional `alpha = f02 - (3/2)(f1 + f2)` as an exact
 * fraction `num/den` in lowest terms.
 *
 * # Safety
 * `p` must be a live handle; `num` and `den` must be valid.
 */
CspolyStatus cspoly_polytope_alpha(const CspolyPolytope *p, int64_t *num, int64_t *den);

/**
 * Vertex list in the polytope text format; free with
 * [`cspoly_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_polytope_to_text(const CspolyPolytope *p, char **out);

/**
 * Conjecture A/B report as JSON (requires central symmetry); free with
 * [`cspoly_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_conjectures_json(const CspolyPolytope *p, char **out);

/**
 * Stress report of the triangulated 2-skeleton framework as JSON; free
 * with [`cspoly_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid.
 */
CspolyStatus cspoly_rigidity_json(const CspolyPolytope *p, bool symmetric, char **out);

/**
 * Hanner catalog of dimension `d` as CSV; free with
 * [`cspoly_string_free`].
 *
 * # Safety
 * `out` must be valid.
 */
CspolyStatus cspoly_hanner_catalog_csv(uintptr_t d, char **out);

/**
 * Run the whole table-verification harness; the item list is returned as
 * JSON and `all_pass` reports whether every item passed (up to the
 * documented ambiguity whitelist). Free the string with
 * [`cspoly_string_free`].
 *
 * # Safety
 * `out` and `all_pass` must be valid.
 */
CspolyStatus cspoly_verify_paper_json(char **out, bool *all_pass);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from a cspoly function and not be freed twice.
 */
void cspoly_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CSPOLY_H */
