// Copyright 2026 The bhcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the bhcodes library.
 *
 * Every fallible call returns a bh_status; on failure the thread's last error
 * message is available from bh_last_error(). Handles are opaque, owned by the
 * caller and released with the matching *_free function. `const char*`
 * results point into the handle and stay valid until it is freed; `char**`
 * results are heap strings released with bh_string_free(). Big integers cross
 * the boundary as decimal strings.
 */
#ifndef BHCODES_H
#define BHCODES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BHCODES_BUILDING)
#    define BH_API __declspec(dllexport)
#  else
#    define BH_API __declspec(dllimport)
#  endif
#else
#  define BH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bh_status {
  BH_OK = 0,
  BH_ERR_INVALID_ARGUMENT = 1,
  BH_ERR_IMPOSSIBLE = 2,
  BH_ERR_UNSUPPORTED = 3,
  BH_ERR_BUDGET = 4,
  BH_ERR_PARSE = 5,
  BH_ERR_IO = 6,
  BH_ERR_INTERNAL = 7
} bh_status;

typedef enum bh_policy { BH_POLICY_FIXED = 0, BH_POLICY_BEST = 1 } bh_policy;

/* A: X-a_i in the full unit group; B: 1, X-a_i modulo scalars. */
typedef enum bh_mode { BH_MODE_A = 0, BH_MODE_B = 1 } bh_mode;

typedef enum bh_method { BH_METHOD_BC = 0, BH_METHOD_GV = 1 } bh_method;

typedef enum bh_route { BH_ROUTE_SHIFTED = 0, BH_ROUTE_DIRECT = 1 } bh_route;

typedef struct bh_bound bh_bound;
typedef struct bh_mu bh_mu;
typedef struct bh_sequence bh_sequence;
typedef struct bh_code bh_code;
typedef struct bh_fixture bh_fixture;

BH_API const char* bh_version(void);
BH_API const char* bh_status_string(bh_status status);
/* Message of the last failed call on this thread ("" if none). */
BH_API const char* bh_last_error(void);
/* Budget figure of the last BH_ERR_BUDGET on this thread. */
BH_API uint64_t bh_last_budget(void);
BH_API void bh_string_free(char* s);
/* Default enumeration budget (10^7 unless BH_BUDGET is set). Passing 0 as a
 * budget anywhere selects it. */
BH_API uint64_t bh_default_budget(void);

/* ---- bounds on A(n,d) --------------------------------------------------- */

typedef struct bh_weight_info {
  uint32_t w;
  bh_method method;
  const char* bc_value;
  const char* gv_value;
  const char* best;
} bh_weight_info;

BH_API bh_status bh_bound_compute(uint32_t n, uint32_t d, bh_policy policy, bh_bound** out);
BH_API void bh_bound_free(bh_bound* b);
BH_API uint32_t bh_bound_n(const bh_bound* b);
BH_API uint32_t bh_bound_d(const bh_bound* b);
/* The even-distance problem actually solved (n+1, d+1 for odd d). */
BH_API uint32_t bh_bound_even_n(const bh_bound* b);
BH_API uint32_t bh_bound_even_d(const bh_bound* b);
BH_API uint32_t bh_bound_u(const bh_bound* b);
BH_API int bh_bound_degenerate(const bh_bound* b);
BH_API const char* bh_bound_log2(const bh_bound* b);
BH_API const char* bh_bound_value(const bh_bound* b);
/* c(n,h) bound used; "" for the degenerate case. */
BH_API const char* bh_bound_c_value(const bh_bound* b);
BH_API bh_route bh_bound_c_route(const bh_bound* b);
BH_API uint32_t bh_bound_c_q(const bh_bound* b);
BH_API size_t bh_bound_weight_count(const bh_bound* b);
BH_API bh_status bh_bound_weight(const bh_bound* b, size_t i, bh_weight_info* out);

BH_API bh_status bh_c_upper(uint32_t n, uint32_t h, char** value, bh_route* route, uint32_t* q);

BH_API bh_status bh_binomial(uint32_t n, uint32_t w, char** out);
/* Exact rational "num/den" (or an integer). */
BH_API bh_status bh_sphere_packing(uint32_t n, uint32_t h, char** out);
BH_API bh_status bh_density_ratio(uint32_t n, uint32_t d, char** out);
/* Correctly rounded 4-decimal log2 of a positive decimal integer, or of
 * num/den when den is not NULL. */
BH_API bh_status bh_log2_fixed(const char* num, const char* den, char** out);

/* ---- minimal unit counts ------------------------------------------------ */

/* Closed form; points are the first n elements of GF(q). */
BH_API bh_status bh_mu_closed_form(uint32_t q, uint32_t n, uint32_t h, bh_mu** out);
/* Exhaustive oracle over all monic degree-h polynomials. */
BH_API bh_status bh_mu_brute_force(uint32_t q, uint32_t n, uint32_t h, uint64_t budget,
                                   bh_mu** out);
/* Constructed optimal polynomial; value is its unit count. */
BH_API bh_status bh_mu_construct(uint32_t q, uint32_t n, uint32_t h, bh_mu** out);
BH_API void bh_mu_free(bh_mu* m);
BH_API const char* bh_mu_value(const bh_mu* m);
BH_API const char* bh_mu_case(const bh_mu* m);
/* "" when no witness is attached. */
BH_API const char* bh_mu_witness(const bh_mu* m);

/* ---- B_h-sequences ------------------------------------------------------ */

/* n_points field elements; the mode-B sequence has n_points + 1 entries. */
BH_API bh_status bh_sequence_build(uint32_t q, uint32_t h, uint32_t n_points, bh_mode mode,
                                   bh_sequence** out);
/* Length-n sequence over the smallest available group. */
BH_API bh_status bh_sequence_choose(uint32_t n, uint32_t h, bh_sequence** out);
BH_API void bh_sequence_free(bh_sequence* s);
BH_API size_t bh_sequence_length(const bh_sequence* s);
BH_API uint32_t bh_sequence_h(const bh_sequence* s);
BH_API uint32_t bh_sequence_q(const bh_sequence* s);
BH_API bh_mode bh_sequence_mode(const bh_sequence* s);
BH_API const char* bh_sequence_group_order(const bh_sequence* s);
BH_API const char* bh_sequence_modulus(const bh_sequence* s);
/* NULL when i is out of range. */
BH_API const char* bh_sequence_element(const bh_sequence* s, size_t i);
/* counterexample (optional) receives two 1-based index multisets such as
 * "{1} {2}", or NULL when the check passes. */
BH_API bh_status bh_sequence_verify(const bh_sequence* s, uint64_t budget, int* is_bh,
                                    uint64_t* multisets, char** counterexample);
/* word is a 0/1 string of the sequence length. */
BH_API bh_status bh_sequence_phi(const bh_sequence* s, const char* word, char** element);

/* ---- codes -------------------------------------------------------------- */

BH_API bh_status bh_code_constant_weight(const bh_sequence* s, uint32_t w, uint64_t budget,
                                         bh_code** out);
BH_API bh_status bh_code_union(const bh_sequence* s, uint32_t u, uint64_t budget,
                               bh_code** out);
/* Parses the export format. */
BH_API bh_status bh_code_parse(const char* text, bh_code** out);
BH_API void bh_code_free(bh_code* c);
BH_API uint32_t bh_code_n(const bh_code* c);
BH_API uint32_t bh_code_claimed_d(const bh_code* c);
/* -1 for mixed weights. */
BH_API int32_t bh_code_claimed_w(const bh_code* c);
BH_API size_t bh_code_size(const bh_code* c);
BH_API const char* bh_code_pigeonhole_floor(const bh_code* c);
/* Writes n characters plus a terminator; buflen must exceed n. */
BH_API bh_status bh_code_word(const bh_code* c, size_t i, char* buf, size_t buflen);
/* min_distance is -1 for codes with fewer than two words; reason is
 * optional. */
BH_API bh_status bh_code_verify(bh_code* c, uint64_t word_budget, int* verified,
                                int32_t* min_distance, char** reason);
BH_API int bh_code_verified(const bh_code* c);
BH_API bh_status bh_code_export(const bh_code* c, char** text);

/* ---- published table fixture -------------------------------------------- */

/* Decimal columns are scaled by 10^4. */
typedef struct bh_fixture_row {
  uint32_t n;
  uint32_t d;
  int64_t new_log2_e4;
  int64_t old_log2_e4;
  int64_t ratio_e4;
} bh_fixture_row;

BH_API bh_status bh_fixture_load(const char* path, bh_fixture** out);
BH_API bh_status bh_fixture_parse(const char* text, bh_fixture** out);
BH_API void bh_fixture_free(bh_fixture* f);
BH_API size_t bh_fixture_row_count(const bh_fixture* f);
BH_API bh_status bh_fixture_row_at(const bh_fixture* f, size_t i, bh_fixture_row* out);
/* 1 when |ratio - 2^(new-old)| <= tolerance. */
BH_API int bh_fixture_ratio_consistent(const bh_fixture_row* row, double tolerance);
BH_API size_t bh_fixture_malformed_count(const bh_fixture* f);
BH_API bh_status bh_fixture_malformed_at(const bh_fixture* f, size_t i, size_t* line,
                                         const char** reason);

#ifdef __cplusplus
}
#endif

#endif /* BHCODES_H */
