// Copyright 2026 The radionum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to radionum: radio labelings, radio-number bounds and exact
 * values for trees, and the wk/sk/dk tree compositions.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a radionum_status;
 * on failure radionum_last_error() describes the problem (thread-local,
 * valid until the next failing call on the same thread). Strings returned
 * through char** are heap-allocated and released with radionum_string_free.
 */
#ifndef RADIONUM_RADIONUM_H
#define RADIONUM_RADIONUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RADIONUM_BUILDING_LIBRARY)
#    define RADIONUM_API __declspec(dllexport)
#  else
#    define RADIONUM_API __declspec(dllimport)
#  endif
#else
#  define RADIONUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum radionum_status {
  RADIONUM_OK = 0,
  RADIONUM_ERR_PARSE = 1,
  RADIONUM_ERR_INVALID_ARGUMENT = 2,
  RADIONUM_ERR_DOMAIN = 3,        /* e.g. diameter < 2 */
  RADIONUM_ERR_REFUSED = 4,       /* composition base with two centers */
  RADIONUM_ERR_CAP_EXCEEDED = 5,  /* exact solver order cap */
  RADIONUM_ERR_BUDGET_EXCEEDED = 6,
  RADIONUM_ERR_NOT_ATTAINED = 7,  /* a required certificate does not exist */
  RADIONUM_ERR_IO = 8,
  RADIONUM_ERR_INTERNAL = 9
} radionum_status;

typedef enum radionum_search_status {
  RADIONUM_SEARCH_FOUND = 0,
  RADIONUM_SEARCH_EXHAUSTED = 1,
  RADIONUM_SEARCH_BUDGET_EXCEEDED = 2
} radionum_search_status;

typedef enum radionum_family {
  RADIONUM_FAMILY_WK = 0,
  RADIONUM_FAMILY_SK = 1,
  RADIONUM_FAMILY_DK = 2
} radionum_family;

typedef enum radionum_ordering_clause {
  RADIONUM_ORDERING_OK = 0,
  RADIONUM_ORDERING_NOT_PERMUTATION = 1,
  RADIONUM_ORDERING_ENDPOINTS = 2,
  RADIONUM_ORDERING_DISTANCE = 3
} radionum_ordering_clause;

typedef struct radionum_tree radionum_tree;
typedef struct radionum_labeling radionum_labeling;
typedef struct radionum_composition radionum_composition;

typedef struct radionum_profile {
  int order;
  int diameter;
  int num_centers;       /* 1 or 2 */
  int centers[2];        /* ascending; centers[1] == -1 when num_centers == 1 */
  int epsilon;
  int64_t total_level;
  int64_t tree_weight;
} radionum_profile;

typedef struct radionum_radio_verdict {
  int pass;
  int u, v;          /* first violating pair, u < v; -1 on pass */
  int64_t deficit;   /* (diam + 1) - d(u,v) - |f(u) - f(v)| */
} radionum_radio_verdict;

typedef struct radionum_ordering_verdict {
  radionum_ordering_clause clause;
  int i, j;          /* positions; -1 when unused */
} radionum_ordering_verdict;

typedef struct radionum_search_result {
  radionum_search_status status;
  uint64_t nodes_explored;
  int64_t span;      /* valid when status == RADIONUM_SEARCH_FOUND */
} radionum_search_result;

typedef struct radionum_exact_result {
  int64_t rn;
  uint64_t nodes_explored;
} radionum_exact_result;

typedef struct radionum_report {
  int order;
  int diameter;
  int64_t predicted;
  int64_t bound;
  radionum_search_status search_status;
  int has_search_span;
  int64_t search_span;
  int has_exact;
  int64_t exact;
  int exploratory;
  int predicted_matches_bound;
  int search_matches_prediction;
  int exact_matches_prediction;  /* 1 when the exact leg was skipped */
  int all_agree;
} radionum_report;

RADIONUM_API const char* radionum_version(void);
RADIONUM_API const char* radionum_last_error(void);
RADIONUM_API const char* radionum_status_name(radionum_status status);
RADIONUM_API void radionum_string_free(char* s);

/* ---- trees ---------------------------------------------------------- */

RADIONUM_API radionum_status radionum_tree_parse(const char* text,
                                                 radionum_tree** out);
RADIONUM_API radionum_status radionum_tree_load(const char* path,
                                                radionum_tree** out);
RADIONUM_API radionum_status radionum_tree_from_edges(int order,
                                                      const int* endpoints,
                                                      size_t num_edges,
                                                      radionum_tree** out);
RADIONUM_API radionum_status radionum_tree_random(int order, uint64_t seed,
                                                  radionum_tree** out);
RADIONUM_API void radionum_tree_free(radionum_tree* tree);

RADIONUM_API int radionum_tree_order(const radionum_tree* tree);
RADIONUM_API radionum_status radionum_tree_distance(const radionum_tree* tree,
                                                    int u, int v, int* out);
RADIONUM_API radionum_status radionum_tree_diameter(const radionum_tree* tree,
                                                    int* out);
RADIONUM_API radionum_status radionum_tree_to_text(const radionum_tree* tree,
                                                   char** out);
/* labeling may be NULL. */
RADIONUM_API radionum_status radionum_tree_to_dot(
    const radionum_tree* tree, const radionum_labeling* labeling, char** out);

/* ---- metrics -------------------------------------------------------- */

RADIONUM_API radionum_status radionum_tree_profile(const radionum_tree* tree,
                                                   radionum_profile* out);
/* Writes tree order many entries. */
RADIONUM_API radionum_status radionum_tree_levels(const radionum_tree* tree,
                                                  int* levels, size_t capacity);
RADIONUM_API radionum_status radionum_weight_lower_bound(
    const radionum_tree* tree, int64_t* out);
RADIONUM_API radionum_status radionum_level_lower_bound(
    const radionum_tree* tree, int64_t* out);

/* ---- labelings and orderings ---------------------------------------- */

RADIONUM_API radionum_status radionum_labeling_create(const int64_t* labels,
                                                      size_t count,
                                                      radionum_labeling** out);
RADIONUM_API radionum_status radionum_labeling_parse(const char* text,
                                                     radionum_labeling** out);
RADIONUM_API radionum_status radionum_labeling_load(const char* path,
                                                    radionum_labeling** out);
RADIONUM_API void radionum_labeling_free(radionum_labeling* labeling);
RADIONUM_API size_t radionum_labeling_size(const radionum_labeling* labeling);
RADIONUM_API radionum_status radionum_labeling_get(
    const radionum_labeling* labeling, int64_t* labels, size_t capacity);
RADIONUM_API radionum_status radionum_labeling_span(
    const radionum_labeling* labeling, int64_t* out);
RADIONUM_API radionum_status radionum_labeling_to_text(
    const radionum_labeling* labeling, char** out);

RADIONUM_API radionum_status radionum_verify_radio(
    const radionum_tree* tree, const radionum_labeling* labeling,
    radionum_radio_verdict* out);
RADIONUM_API radionum_status radionum_ordering_check(
    const radionum_tree* tree, const int* order, size_t count,
    radionum_ordering_verdict* out);
RADIONUM_API radionum_status radionum_label_from_ordering(
    const radionum_tree* tree, const int* order, size_t count,
    radionum_labeling** out);

/* ---- solvers -------------------------------------------------------- */

/* On FOUND, `order` (capacity >= tree order, may be NULL) receives the
 * certificate and *labeling (may be NULL) the labeling built from it.
 * EXHAUSTED and BUDGET_EXCEEDED are results, not errors. */
RADIONUM_API radionum_status radionum_search_ordering(
    const radionum_tree* tree, uint64_t budget, radionum_search_result* out,
    int* order, size_t capacity, radionum_labeling** labeling);

/* Exact radio number. Fails with RADIONUM_ERR_CAP_EXCEEDED or
 * RADIONUM_ERR_BUDGET_EXCEEDED instead of returning an unproven value.
 * incumbent may be NULL; witness may be NULL. */
RADIONUM_API radionum_status radionum_exact(const radionum_tree* tree, int cap,
                                            uint64_t budget,
                                            const radionum_labeling* incumbent,
                                            radionum_exact_result* out,
                                            radionum_labeling** witness);

/* ---- compositions --------------------------------------------------- */

RADIONUM_API radionum_status radionum_make_kstar(int k, radionum_tree** out);
RADIONUM_API radionum_status radionum_make_kdoublestar(int k,
                                                       radionum_tree** out);
/* WK uses all `count` bases and ignores k; SK/DK need count == 1. */
RADIONUM_API radionum_status radionum_compose(
    radionum_family family, const radionum_tree* const* bases, size_t count,
    int k, radionum_composition** out);
RADIONUM_API void radionum_composition_free(radionum_composition* comp);
/* Borrowed; lives as long as the composition. */
RADIONUM_API const radionum_tree* radionum_composition_tree(
    const radionum_composition* comp);
RADIONUM_API radionum_status radionum_composition_provenance(
    const radionum_composition* comp, char** out);
RADIONUM_API radionum_status radionum_predicted_rn(
    const radionum_composition* comp, const int64_t* base_rns, size_t count,
    int composed_diameter, int64_t* out);
/* Fails with RADIONUM_ERR_NOT_ATTAINED when a base has no certificate. */
RADIONUM_API radionum_status radionum_theorem_check(
    const radionum_composition* comp, int cap, uint64_t budget,
    radionum_report* out);

#ifdef __cplusplus
}
#endif

#endif /* RADIONUM_RADIONUM_H */
