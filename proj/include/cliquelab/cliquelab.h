/*
 * Copyright 2026 The cliquelab Authors.
 * Licensed under the Apache License, Version 2.0.
 *
 * C interface to cliquelab. Objects are opaque handles created and released
 * by the library. Every fallible call returns a cliquelab_status; on failure
 * cliquelab_last_error() describes the problem for the calling thread.
 * Strings handed out through char** parameters are owned by the caller and
 * must be released with cliquelab_string_free().
 */

#ifndef CLIQUELAB_H
#define CLIQUELAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(CLIQUELAB_BUILDING_LIBRARY)
#define CLIQUELAB_API __attribute__((visibility("default")))
#else
#define CLIQUELAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cliquelab_status {
  CLIQUELAB_OK = 0,
  CLIQUELAB_ERR_PARSE = 1,
  CLIQUELAB_ERR_INPUT = 2,
  CLIQUELAB_ERR_UNSUPPORTED_SIZE = 3,
  CLIQUELAB_ERR_ZERO_POLYNOMIAL = 4,
  CLIQUELAB_ERR_NOT_SQUARE_FREE = 5,
  CLIQUELAB_ERR_NO_REAL_ROOT = 6,
  CLIQUELAB_ERR_IO = 7,
  CLIQUELAB_ERR_INVALID_ARGUMENT = 8,
  CLIQUELAB_ERR_INTERNAL = 9
} cliquelab_status;

typedef struct cliquelab_graph cliquelab_graph;
typedef struct cliquelab_scan_config cliquelab_scan_config;

typedef struct cliquelab_scan_summary {
  uint64_t seen;
  uint64_t filtered;
  uint64_t real_rooted;
  uint64_t counterexamples;
  uint64_t hits;
  uint64_t malformed;
} cliquelab_scan_summary;

/* Return nonzero to stop the enumeration early. */
typedef int (*cliquelab_graph6_callback)(const char* graph6, void* user);
/* One JSON object or diagnostic message per call, without newline. */
typedef void (*cliquelab_line_callback)(const char* line, void* user);

#define CLIQUELAB_ENUM_CONNECTED 1u
#define CLIQUELAB_ENUM_TREES 2u

CLIQUELAB_API const char* cliquelab_version(void);
CLIQUELAB_API const char* cliquelab_status_name(cliquelab_status status);
CLIQUELAB_API const char* cliquelab_last_error(void);
CLIQUELAB_API void cliquelab_string_free(char* s);

/* ---- graphs ---- */

CLIQUELAB_API cliquelab_status cliquelab_graph_from_graph6(const char* text, cliquelab_graph** out);
/* Edge-list text: "n" on the first line, then "u v" per line. */
CLIQUELAB_API cliquelab_status cliquelab_graph_from_edge_list_text(const char* text, cliquelab_graph** out);
/* endpoints holds 2 * edge_count vertex ids. */
CLIQUELAB_API cliquelab_status cliquelab_graph_from_edges(int n, const int* endpoints, size_t edge_count,
                                                          cliquelab_graph** out);
CLIQUELAB_API void cliquelab_graph_free(cliquelab_graph* g);
CLIQUELAB_API int cliquelab_graph_order(const cliquelab_graph* g);
CLIQUELAB_API int cliquelab_graph_size(const cliquelab_graph* g);
CLIQUELAB_API cliquelab_status cliquelab_graph_to_graph6(const cliquelab_graph* g, char** out);
/* n, m, connected, kappa, chordal, omega, triangle_free, max_triangles_per_edge. */
CLIQUELAB_API cliquelab_status cliquelab_graph_properties_json(const cliquelab_graph* g, char** out);

/* ---- clique polynomials and roots ---- */

/* Coefficient list, e.g. "[1,3,3,1]". */
CLIQUELAB_API cliquelab_status cliquelab_clique_polynomial(const cliquelab_graph* g, char** out);
CLIQUELAB_API cliquelab_status cliquelab_graph_roots_json(const cliquelab_graph* g, char** out);
/* poly is a coefficient list in ascending degree. */
CLIQUELAB_API cliquelab_status cliquelab_polynomial_roots_json(const char* poly, char** out);

/* ---- claims and the interlacing lemma ---- */

/* conclusion receives 1 / 0 when the hypothesis is met, -1 otherwise. */
CLIQUELAB_API cliquelab_status cliquelab_verify_json(const cliquelab_graph* g, const char* claim, int* conclusion,
                                                     char** out);
/* family_text holds one coefficient list per line. violation receives 1
 * when the hypothesis holds and the conclusion fails. */
CLIQUELAB_API cliquelab_status cliquelab_lemma_json(const char* family_text, int* violation, char** out);
CLIQUELAB_API cliquelab_status cliquelab_lemma_stress_json(uint64_t seed, uint64_t trials, uint64_t* violations,
                                                           char** out);

/* ---- enumeration and scans ---- */

CLIQUELAB_API cliquelab_status cliquelab_enumerate(int n, unsigned flags, cliquelab_graph6_callback callback,
                                                   void* user);

/* target: conj1, conj2, conj3[:l], quest1, prop:<claim>, identities. */
CLIQUELAB_API cliquelab_status cliquelab_scan_config_create(const char* target, cliquelab_scan_config** out);
CLIQUELAB_API void cliquelab_scan_config_free(cliquelab_scan_config* config);
CLIQUELAB_API cliquelab_status cliquelab_scan_config_set_builtin(cliquelab_scan_config* config, int n);
/* "-" reads standard input. */
CLIQUELAB_API cliquelab_status cliquelab_scan_config_set_input(cliquelab_scan_config* config, const char* path);
CLIQUELAB_API cliquelab_status cliquelab_scan_config_set_jobs(cliquelab_scan_config* config, int jobs);
/* all, hits or summary. */
CLIQUELAB_API cliquelab_status cliquelab_scan_config_set_emit(cliquelab_scan_config* config, const char* policy);
CLIQUELAB_API cliquelab_status cliquelab_scan_run(const cliquelab_scan_config* config, cliquelab_line_callback out,
                                                  cliquelab_line_callback diagnostics, void* user,
                                                  cliquelab_scan_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* CLIQUELAB_H */
