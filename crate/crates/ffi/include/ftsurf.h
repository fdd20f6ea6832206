#ifndef FTSURF_H
#define FTSURF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FtsStatus {
  FTS_STATUS_OK = 0,
  FTS_STATUS_NULL_POINTER = 1,
  FTS_STATUS_INVALID_UTF8 = 2,
  FTS_STATUS_PARSE = 3,
  FTS_STATUS_INVALID_INPUT = 4,
  FTS_STATUS_OUT_OF_RANGE = 5,
  FTS_STATUS_PANIC = 6,
} FtsStatus;

typedef struct FtsClassification FtsClassification;

typedef struct FtsGraph FtsGraph;

typedef struct FtsSurface FtsSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the next failing call.
const char *fts_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, freed at most once.
void fts_string_free(char *s);

// Parse a surface from JSON, either `{"faces": [...]}` or a bare face list.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum FtsStatus fts_surface_parse(const char *json, struct FtsSurface **out);

// # Safety
// `s` must be NULL or a handle from this library, freed at most once.
void fts_surface_free(struct FtsSurface *s);

// # Safety
// `s` must be a live surface handle; the out pointers must be valid.
enum FtsStatus fts_surface_counts(const struct FtsSurface *s,
                                  size_t *vertices,
                                  size_t *edges,
                                  size_t *faces);

// # Safety
// `s` must be a live surface handle; the out pointers must be valid.
enum FtsStatus fts_surface_topology(const struct FtsSurface *s, int64_t *chi, bool *orientable);

// Order of the automorphism group, saturating at `UINT64_MAX`.
//
// # Safety
// `s` must be a live surface handle and `order` a valid pointer.
enum FtsStatus fts_surface_automorphism_order(const struct FtsSurface *s, uint64_t *order);

// # Safety
// `s` must be a live surface handle and `out` a valid pointer.
enum FtsStatus fts_surface_is_face_transitive(const struct FtsSurface *s, bool *out);

// # Safety
// `s` must be a live surface handle and `out` a valid pointer.
enum FtsStatus fts_surface_is_minimal(const struct FtsSurface *s, bool *out);

// Subtype tag such as `"(2,1).3"`. Fails with `FTS_STATUS_INVALID_INPUT`
// if the surface is not face-transitive.
//
// # Safety
// `s` must be a live surface handle and `out` a valid pointer.
enum FtsStatus fts_surface_subtype(const struct FtsSurface *s, char **out);

// Isomorphism-invariant identifier of the surface.
//
// # Safety
// `s` must be a live surface handle and `out` a valid pointer.
enum FtsStatus fts_surface_canonical_id(const struct FtsSurface *s, char **out);

// # Safety
// `s` must be a live surface handle and `out` a valid pointer.
enum FtsStatus fts_surface_to_json(const struct FtsSurface *s, char **out);

// # Safety
// `s` must be a live surface handle and `out` a valid pointer.
enum FtsStatus fts_surface_face_graph(const struct FtsSurface *s, struct FtsGraph **out);

// Parse a cubic graph from an edge list, graph6 or sparse6 text.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum FtsStatus fts_graph_parse(const char *text, struct FtsGraph **out);

// # Safety
// `g` must be NULL or a handle from this library, freed at most once.
void fts_graph_free(struct FtsGraph *g);

// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum FtsStatus fts_graph_order(const struct FtsGraph *g, size_t *out);

// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum FtsStatus fts_graph_to_graph6(const struct FtsGraph *g, char **out);

// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum FtsStatus fts_graph_is_node_transitive(const struct FtsGraph *g, bool *out);

// All face-transitive surfaces with face graph `g`. `max_aut` caps the
// automorphism group order; 0 means the library default. A skipped graph
// still yields a handle, with no results and a reason.
//
// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum FtsStatus fts_classify(const struct FtsGraph *g,
                            uint64_t max_aut,
                            struct FtsClassification **out);

// # Safety
// `c` must be NULL or a handle from this library, freed at most once.
void fts_classification_free(struct FtsClassification *c);

// # Safety
// `c` must be a live classification handle and `out` a valid pointer.
enum FtsStatus fts_classification_len(const struct FtsClassification *c, size_t *out);

// Writes the skip reason, or NULL if the graph was classified.
//
// # Safety
// `c` must be a live classification handle and `out` a valid pointer.
enum FtsStatus fts_classification_skip_reason(const struct FtsClassification *c, char **out);

// Copy of the `i`-th surface, owned by the caller.
//
// # Safety
// `c` must be a live classification handle and `out` a valid pointer.
enum FtsStatus fts_classification_surface(const struct FtsClassification *c,
                                          size_t i,
                                          struct FtsSurface **out);

// # Safety
// `c` must be a live classification handle and `out` a valid pointer.
enum FtsStatus fts_classification_subtype(const struct FtsClassification *c, size_t i, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FTSURF_H */
