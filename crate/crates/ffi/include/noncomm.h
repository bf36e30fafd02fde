#ifndef NONCOMM_H
#define NONCOMM_H

#include <stddef.h>
#include <stdint.h>

// Status codes.
typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_NULL_POINTER = 1,
  // Malformed group spec or non-UTF-8 input.
  NC_STATUS_PARSE = 2,
  NC_STATUS_INVALID_ARGUMENT = 3,
  // Order or dimension above the cap.
  NC_STATUS_CAP_EXCEEDED = 4,
  // Any other failure inside the computation.
  NC_STATUS_COMPUTATION = 5,
  // A Rust panic was caught at the boundary.
  NC_STATUS_PANIC = 6,
} NcStatus;

// Opaque graph handle.
typedef struct NcGraph NcGraph;

// Opaque group handle.
typedef struct NcGroup NcGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; empty if none. Valid
// until the next failing call on the same thread. Do not free.
const char *nc_last_error_message(void);

// Parses a group spec such as `dihedral:5` or `prod(sym:3,cyclic:2)` and
// builds the group, refusing orders above `cap`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum NcStatus nc_group_parse(const char *spec, size_t cap, struct NcGroup **out);

// # Safety
// `g` must come from [`nc_group_parse`] and not be used afterwards.
void nc_group_free(struct NcGroup *g);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum NcStatus nc_group_order(const struct NcGroup *g, size_t *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum NcStatus nc_group_center_size(const struct NcGroup *g, size_t *out);

// Builds the non-commuting graph; it has no vertices for abelian groups.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum NcStatus nc_graph_noncommuting(const struct NcGroup *g, struct NcGraph **out);

// # Safety
// `g` must come from [`nc_graph_noncommuting`] and not be used afterwards.
void nc_graph_free(struct NcGraph *g);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum NcStatus nc_graph_vertex_count(const struct NcGraph *g, size_t *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum NcStatus nc_graph_edge_count(const struct NcGraph *g, size_t *out);

// Energy of the graph. `numeric` receives the value; if `exact` is not
// null it receives the exact form (`a+b*sqrt(d)`, free with
// [`nc_string_free`]) or null when only a numeric value is known.
//
// # Safety
// `g` must be a live handle; `numeric` must be writable; `exact` may be null.
enum NcStatus nc_graph_energy(const struct NcGraph *g, double *numeric, char **exact);

// Laplacian energy `Σ|μ − 2m/N|`; outputs as for [`nc_graph_energy`].
//
// # Safety
// As [`nc_graph_energy`].
enum NcStatus nc_graph_laplacian_energy(const struct NcGraph *g, double *numeric, char **exact);

// Characteristic polynomial of the adjacency matrix as JSON
// (`{"degree":…,"coefficients":["…",…]}`, lowest degree first, decimal
// strings). Free with [`nc_string_free`].
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum NcStatus nc_graph_charpoly(const struct NcGraph *g, char **out);

// # Safety
// `s` must come from this library and not be used afterwards.
void nc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NONCOMM_H */
