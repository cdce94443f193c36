/*
 * Copyright 2026 The bsk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libbsk: Conway polynomials of braid closures, skein
 * resolution trees for positive 3-strand band words, exhaustive scans and
 * the built-in verification suite.
 *
 * Conventions:
 *  - Every fallible call returns a bsk_status; BSK_OK is zero.
 *  - Results come back through out-parameters as opaque handles or strings
 *    owned by the caller, released with the matching *_free function.
 *  - On failure bsk_last_error() describes the problem. The message is
 *    thread-local and stays valid until the next failing call on the same
 *    thread.
 */

#ifndef BSK_BSK_H
#define BSK_BSK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BSK_BUILDING_LIBRARY)
#    define BSK_API __declspec(dllexport)
#  else
#    define BSK_API __declspec(dllimport)
#  endif
#else
#  define BSK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsk_status {
  BSK_OK = 0,
  BSK_ERR_PARSE = 1,
  BSK_ERR_INDEX_OUT_OF_RANGE = 2,
  BSK_ERR_NOT_ORDERED = 3,
  BSK_ERR_STRAND_MISMATCH = 4,
  BSK_ERR_INVALID_ARGUMENT = 5,
  BSK_ERR_NULL_POINTER = 6,
  BSK_ERR_IO = 7,
  BSK_ERR_VERIFICATION = 8,
  BSK_ERR_INTERNAL = 9
} bsk_status;

typedef enum bsk_alphabet {
  BSK_ALPHABET_ARTIN = 0, /* "1 -2 1" */
  BSK_ALPHABET_BAND = 1   /* "1:3 -2:5" */
} bsk_alphabet;

typedef enum bsk_format {
  BSK_FORMAT_HUMAN = 0,
  BSK_FORMAT_JSON = 1,
  BSK_FORMAT_DOT = 2
} bsk_format;

typedef struct bsk_poly bsk_poly;
typedef struct bsk_tree bsk_tree;

BSK_API const char* bsk_version(void);
BSK_API const char* bsk_status_name(bsk_status status);
BSK_API const char* bsk_last_error(void);

BSK_API void bsk_string_free(char* s);

/* ---- Conway polynomials ------------------------------------------------ */

/* Conway polynomial of the closure of `word` on `strands` strands. */
BSK_API bsk_status bsk_conway(const char* word, bsk_alphabet alphabet, int strands,
                              bsk_poly** out);

BSK_API void bsk_poly_free(bsk_poly* p);
/* -1 for the zero polynomial. */
BSK_API int bsk_poly_degree(const bsk_poly* p);
/* 1 when every coefficient is >= 0, else 0. */
BSK_API int bsk_poly_is_nonneg(const bsk_poly* p);
/* Decimal string of the coefficient of z^degree (0 outside the support). */
BSK_API bsk_status bsk_poly_coefficient(const bsk_poly* p, int degree, char** out);
/* BSK_FORMAT_HUMAN: "1 - z^2"; BSK_FORMAT_JSON: "[1,0,-1]". */
BSK_API bsk_status bsk_poly_render(const bsk_poly* p, bsk_format format, char** out);

/* ---- Resolution trees (3 strands, positive band letters 1, 2, 13) ------ */

BSK_API bsk_status bsk_tree_resolve(const char* word, bsk_tree** out);
BSK_API void bsk_tree_free(bsk_tree* t);
BSK_API size_t bsk_tree_leaf_count(const bsk_tree* t);
BSK_API int bsk_tree_depth(const bsk_tree* t);
BSK_API bsk_status bsk_tree_value(const bsk_tree* t, bsk_poly** out);
/* BSK_FORMAT_JSON or BSK_FORMAT_DOT. */
BSK_API bsk_status bsk_tree_render(const bsk_tree* t, bsk_format format, char** out);

/* ---- Exhaustive scan --------------------------------------------------- */

typedef struct bsk_scan_summary {
  uint64_t words;
  uint64_t distinct_polynomials;
  int max_degree;
} bsk_scan_summary;

/*
 * Checks every positive 3-strand band word of length 0..max_len. When
 * out_path is non-NULL one JSON record per word is written there; the file
 * content does not depend on `jobs`. Returns BSK_ERR_VERIFICATION, naming the
 * word in bsk_last_error(), if any word fails.
 */
BSK_API bsk_status bsk_scan(int max_len, int jobs, const char* out_path,
                            bsk_scan_summary* summary);

/* ---- Verification suite ------------------------------------------------ */

typedef void (*bsk_claim_fn)(const char* claim, int passed, const char* detail,
                             double seconds, void* user);

/* Seed from BSK_SEED when set, else the built-in default. */
BSK_API uint64_t bsk_default_seed(void);

/*
 * Runs every claim, reporting each through `on_claim` (may be NULL).
 * *all_passed is 1 iff every claim passed. Returns BSK_OK even when a claim
 * fails; the failure shows up in *all_passed.
 */
BSK_API bsk_status bsk_verify(uint64_t seed, bsk_claim_fn on_claim, void* user,
                              int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* BSK_BSK_H */
