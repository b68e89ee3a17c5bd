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

#include "bhcodes/bhcodes.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "bhcodes/algebra.hpp"
#include "bhcodes/bose_chowla.hpp"
#include "bhcodes/bounds_engine.hpp"
#include "bhcodes/code_builder.hpp"
#include "bhcodes/error.hpp"
#include "bhcodes/fixture.hpp"
#include "bhcodes/mu_bounds.hpp"

using namespace bhcodes;

struct bh_bound {
  BoundRecord record;
  std::string value;
  std::string c_value;
  struct Weight {
    std::uint32_t w;
    WeightMethod method;
    std::string bc, gv, best;
  };
  std::vector<Weight> weights;
};

struct bh_mu {
  std::string value;
  std::string case_tag;
  std::string witness;
};

struct bh_sequence {
  BhSequence seq;
  std::string group_order;
  std::string modulus;
  std::vector<std::string> elements;
};

struct bh_code {
  CodeInstance code;
  std::string floor;
};

struct bh_fixture {
  FixtureParse parsed;
};

namespace {

thread_local std::string g_last_error;
thread_local std::uint64_t g_last_budget = 0;

template <class F>
bh_status guarded(F&& f) noexcept {
  try {
    g_last_error.clear();
    f();
    return BH_OK;
  } catch (const BudgetExceeded& e) {
    g_last_error = e.what();
    g_last_budget = e.budget();
    return BH_ERR_BUDGET;
  } catch (const Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
      case ErrorCode::kInvalidArgument: return BH_ERR_INVALID_ARGUMENT;
      case ErrorCode::kImpossible: return BH_ERR_IMPOSSIBLE;
      case ErrorCode::kUnsupported: return BH_ERR_UNSUPPORTED;
      case ErrorCode::kBudgetExceeded: return BH_ERR_BUDGET;
      case ErrorCode::kParse: return BH_ERR_PARSE;
      case ErrorCode::kIo: return BH_ERR_IO;
    }
    return BH_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BH_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_ptr(const void* p, const char* name) {
  require(p != nullptr, std::string(name) + " must not be NULL");
}

mpz_class parse_integer(const char* text, const char* what) {
  require_ptr(text, what);
  mpz_class v;
  if (v.set_str(text, 10) != 0) {
    throw Error(ErrorCode::kParse, std::string(what) + " is not a decimal integer");
  }
  return v;
}

std::vector<FieldElement> first_points(const Field& field, std::uint32_t n) {
  require(n <= field.size(), "n exceeds q");
  std::vector<FieldElement> pts(n);
  for (std::uint32_t i = 0; i < n; ++i) pts[i] = field.element(i);
  return pts;
}

std::unique_ptr<bh_sequence> wrap_sequence(BhSequence seq) {
  auto out = std::unique_ptr<bh_sequence>(new bh_sequence{std::move(seq), {}, {}, {}});
  out->group_order = out->seq.group_order().get_str();
  out->modulus = out->seq.group.ring().modulus().to_string();
  for (const auto& e : out->seq.elements) out->elements.push_back(describe(e));
  return out;
}

std::string format_multiset(const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(idx[i] + 1);
  }
  return out + "}";
}

}  // namespace

extern "C" {

const char* bh_version(void) { return "1.0.0"; }

const char* bh_status_string(bh_status status) {
  switch (status) {
    case BH_OK: return "ok";
    case BH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BH_ERR_IMPOSSIBLE: return "impossible";
    case BH_ERR_UNSUPPORTED: return "unsupported";
    case BH_ERR_BUDGET: return "budget exceeded";
    case BH_ERR_PARSE: return "parse error";
    case BH_ERR_IO: return "i/o error";
    case BH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bh_last_error(void) { return g_last_error.c_str(); }
uint64_t bh_last_budget(void) { return g_last_budget; }
void bh_string_free(char* s) { std::free(s); }
uint64_t bh_default_budget(void) { return default_budget(); }

// ---- bounds ---------------------------------------------------------------

bh_status bh_bound_compute(uint32_t n, uint32_t d, bh_policy policy, bh_bound** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    auto b = std::make_unique<bh_bound>();
    b->record = a_lower(n, d, policy == BH_POLICY_FIXED ? UPolicy::kFixed : UPolicy::kBest);
    b->value = b->record.lower_bound.get_str();
    if (b->record.c_used) b->c_value = b->record.c_used->value.get_str();
    for (const auto& wb : b->record.per_weight) {
      b->weights.push_back(
          {wb.w, wb.method, wb.bc_value.get_str(), wb.gv_value.get_str(), wb.best.get_str()});
    }
    *out = b.release();
  });
}

void bh_bound_free(bh_bound* b) { delete b; }
uint32_t bh_bound_n(const bh_bound* b) { return b->record.n; }
uint32_t bh_bound_d(const bh_bound* b) { return b->record.d; }
uint32_t bh_bound_even_n(const bh_bound* b) { return b->record.even_n; }
uint32_t bh_bound_even_d(const bh_bound* b) { return b->record.even_d; }
uint32_t bh_bound_u(const bh_bound* b) { return b->record.u_used; }
int bh_bound_degenerate(const bh_bound* b) { return b->record.degenerate ? 1 : 0; }
const char* bh_bound_log2(const bh_bound* b) { return b->record.log2_value.c_str(); }
const char* bh_bound_value(const bh_bound* b) { return b->value.c_str(); }
const char* bh_bound_c_value(const bh_bound* b) { return b->c_value.c_str(); }

bh_route bh_bound_c_route(const bh_bound* b) {
  return b->record.c_used && b->record.c_used->route == CRoute::kShifted ? BH_ROUTE_SHIFTED
                                                                         : BH_ROUTE_DIRECT;
}

uint32_t bh_bound_c_q(const bh_bound* b) {
  return b->record.c_used ? b->record.c_used->q_used.q : 0;
}

size_t bh_bound_weight_count(const bh_bound* b) { return b->weights.size(); }

bh_status bh_bound_weight(const bh_bound* b, size_t i, bh_weight_info* out) {
  return guarded([&] {
    require_ptr(b, "bound");
    require_ptr(out, "out");
    require(i < b->weights.size(), "weight index out of range");
    const auto& w = b->weights[i];
    out->w = w.w;
    out->method = w.method == WeightMethod::kBoseChowla ? BH_METHOD_BC : BH_METHOD_GV;
    out->bc_value = w.bc.c_str();
    out->gv_value = w.gv.c_str();
    out->best = w.best.c_str();
  });
}

bh_status bh_c_upper(uint32_t n, uint32_t h, char** value, bh_route* route, uint32_t* q) {
  return guarded([&] {
    const CBound c = c_upper(n, h);
    if (route) *route = c.route == CRoute::kShifted ? BH_ROUTE_SHIFTED : BH_ROUTE_DIRECT;
    if (q) *q = c.q_used.q;
    if (value) *value = dup_string(c.value.get_str());
  });
}

bh_status bh_binomial(uint32_t n, uint32_t w, char** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = dup_string(binomial(n, w).get_str());
  });
}

bh_status bh_sphere_packing(uint32_t n, uint32_t h, char** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = dup_string(sphere_packing(n, h).get_str());
  });
}

bh_status bh_density_ratio(uint32_t n, uint32_t d, char** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = dup_string(density_ratio(n, d));
  });
}

bh_status bh_log2_fixed(const char* num, const char* den, char** out) {
  return guarded([&] {
    require_ptr(out, "out");
    const mpz_class a = parse_integer(num, "numerator");
    const mpz_class b = den ? parse_integer(den, "denominator") : mpz_class(1);
    require(b > 0, "denominator must be positive");
    *out = dup_string(log2_fixed(BigRational(a, b)));
  });
}

// ---- mu -------------------------------------------------------------------

bh_status bh_mu_closed_form(uint32_t q, uint32_t n, uint32_t h, bh_mu** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    const MuResult r = mu_closed_form(q, n, h);
    *out = new bh_mu{r.value.get_str(), std::string(to_string(r.case_tag)), ""};
  });
}

bh_status bh_mu_brute_force(uint32_t q, uint32_t n, uint32_t h, uint64_t budget, bh_mu** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    require(is_prime_power(q).has_value(), "q = " + std::to_string(q) + " is not a prime power");
    require(n >= 1 && n <= q, "need 1 <= n <= q");
    const Field field = Field::of_order(q);
    const auto pts = first_points(field, n);
    const MuResult r = mu_brute_force(field, pts, static_cast<int>(h), budget);
    *out = new bh_mu{r.value.get_str(), std::string(to_string(r.case_tag)),
                     r.witness ? r.witness->to_string() : ""};
  });
}

bh_status bh_mu_construct(uint32_t q, uint32_t n, uint32_t h, bh_mu** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    const MuCase tag = mu_case(q, n, h);
    const Field field = Field::of_order(q);
    const auto pts = first_points(field, n);
    const FactoredPolynomial p = construct_optimal_poly(field, pts, static_cast<int>(h));
    *out = new bh_mu{mu_of_factors(q, p.factors).get_str(), std::string(to_string(tag)),
                     p.product.to_string()};
  });
}

void bh_mu_free(bh_mu* m) { delete m; }
const char* bh_mu_value(const bh_mu* m) { return m->value.c_str(); }
const char* bh_mu_case(const bh_mu* m) { return m->case_tag.c_str(); }
const char* bh_mu_witness(const bh_mu* m) { return m->witness.c_str(); }

// ---- sequences --------------------------------------------------------------

bh_status bh_sequence_build(uint32_t q, uint32_t h, uint32_t n_points, bh_mode mode,
                            bh_sequence** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    const Field field = Field::of_order(q);
    BhSequence seq = mode == BH_MODE_A ? build_sequence_a(field, static_cast<int>(h), n_points)
                                       : build_sequence_b(field, static_cast<int>(h), n_points);
    *out = wrap_sequence(std::move(seq)).release();
  });
}

bh_status bh_sequence_choose(uint32_t n, uint32_t h, bh_sequence** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    *out = wrap_sequence(choose_sequence(n, static_cast<int>(h))).release();
  });
}

void bh_sequence_free(bh_sequence* s) { delete s; }
size_t bh_sequence_length(const bh_sequence* s) { return s->seq.length(); }
uint32_t bh_sequence_h(const bh_sequence* s) { return static_cast<uint32_t>(s->seq.h); }
uint32_t bh_sequence_q(const bh_sequence* s) { return s->seq.group.ring().field().size(); }

bh_mode bh_sequence_mode(const bh_sequence* s) {
  return s->seq.mode() == GroupMode::kFullUnitGroup ? BH_MODE_A : BH_MODE_B;
}

const char* bh_sequence_group_order(const bh_sequence* s) { return s->group_order.c_str(); }
const char* bh_sequence_modulus(const bh_sequence* s) { return s->modulus.c_str(); }

const char* bh_sequence_element(const bh_sequence* s, size_t i) {
  return i < s->elements.size() ? s->elements[i].c_str() : nullptr;
}

bh_status bh_sequence_verify(const bh_sequence* s, uint64_t budget, int* is_bh,
                             uint64_t* multisets, char** counterexample) {
  return guarded([&] {
    require_ptr(s, "sequence");
    if (counterexample) *counterexample = nullptr;
    const BhVerification v = verify_bh(s->seq, budget);
    if (is_bh) *is_bh = v.ok ? 1 : 0;
    if (multisets) *multisets = v.multisets;
    if (counterexample && v.counterexample) {
      *counterexample = dup_string(format_multiset(v.counterexample->first) + " " +
                                   format_multiset(v.counterexample->second));
    }
  });
}

bh_status bh_sequence_phi(const bh_sequence* s, const char* word, char** element) {
  return guarded([&] {
    require_ptr(s, "sequence");
    require_ptr(word, "word");
    require_ptr(element, "element");
    std::vector<std::uint8_t> bits;
    for (const char* c = word; *c; ++c) {
      require(*c == '0' || *c == '1', "word characters must be 0 or 1");
      bits.push_back(*c == '1' ? 1 : 0);
    }
    *element = dup_string(describe(phi(bits, s->seq)));
  });
}

// ---- codes ----------------------------------------------------------------

bh_status bh_code_constant_weight(const bh_sequence* s, uint32_t w, uint64_t budget,
                                  bh_code** out) {
  return guarded([&] {
    require_ptr(s, "sequence");
    require_ptr(out, "out");
    *out = nullptr;
    auto c = std::make_unique<bh_code>();
    c->code = build_constant_weight_code(s->seq, w, budget);
    c->floor = c->code.pigeonhole_floor.get_str();
    *out = c.release();
  });
}

bh_status bh_code_union(const bh_sequence* s, uint32_t u, uint64_t budget, bh_code** out) {
  return guarded([&] {
    require_ptr(s, "sequence");
    require_ptr(out, "out");
    *out = nullptr;
    auto c = std::make_unique<bh_code>();
    c->code = build_union_code(s->seq, u, budget);
    c->floor = c->code.pigeonhole_floor.get_str();
    *out = c.release();
  });
}

bh_status bh_code_parse(const char* text, bh_code** out) {
  return guarded([&] {
    require_ptr(text, "text");
    require_ptr(out, "out");
    *out = nullptr;
    auto c = std::make_unique<bh_code>();
    c->code = parse_code(text);
    c->floor = "0";
    *out = c.release();
  });
}

void bh_code_free(bh_code* c) { delete c; }
uint32_t bh_code_n(const bh_code* c) { return c->code.n; }
uint32_t bh_code_claimed_d(const bh_code* c) { return c->code.claimed_d; }

int32_t bh_code_claimed_w(const bh_code* c) {
  return c->code.claimed_w ? static_cast<int32_t>(*c->code.claimed_w) : -1;
}

size_t bh_code_size(const bh_code* c) { return c->code.words.size(); }
const char* bh_code_pigeonhole_floor(const bh_code* c) { return c->floor.c_str(); }
int bh_code_verified(const bh_code* c) { return c->code.verified ? 1 : 0; }

bh_status bh_code_word(const bh_code* c, size_t i, char* buf, size_t buflen) {
  return guarded([&] {
    require_ptr(c, "code");
    require_ptr(buf, "buf");
    require(i < c->code.words.size(), "word index out of range");
    require(buflen > c->code.n, "buffer too small");
    const std::string s = word_to_string(c->code.words[i], c->code.n);
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

bh_status bh_code_verify(bh_code* c, uint64_t word_budget, int* verified, int32_t* min_distance,
                         char** reason) {
  return guarded([&] {
    require_ptr(c, "code");
    if (reason) *reason = nullptr;
    const VerifyReport r =
        verify_code(c->code, word_budget == 0 ? kDefaultPairWordBudget : word_budget);
    if (verified) *verified = r.verified ? 1 : 0;
    if (min_distance) *min_distance = r.min_distance ? static_cast<int32_t>(*r.min_distance) : -1;
    if (reason && !r.reason.empty()) *reason = dup_string(r.reason);
  });
}

bh_status bh_code_export(const bh_code* c, char** text) {
  return guarded([&] {
    require_ptr(c, "code");
    require_ptr(text, "text");
    *text = dup_string(export_code(c->code));
  });
}

// ---- fixture --------------------------------------------------------------

bh_status bh_fixture_load(const char* path, bh_fixture** out) {
  return guarded([&] {
    require_ptr(path, "path");
    require_ptr(out, "out");
    *out = nullptr;
    *out = new bh_fixture{load_fixture(path)};
  });
}

bh_status bh_fixture_parse(const char* text, bh_fixture** out) {
  return guarded([&] {
    require_ptr(text, "text");
    require_ptr(out, "out");
    *out = nullptr;
    *out = new bh_fixture{parse_fixture(text)};
  });
}

void bh_fixture_free(bh_fixture* f) { delete f; }
size_t bh_fixture_row_count(const bh_fixture* f) { return f->parsed.rows.size(); }

bh_status bh_fixture_row_at(const bh_fixture* f, size_t i, bh_fixture_row* out) {
  return guarded([&] {
    require_ptr(f, "fixture");
    require_ptr(out, "out");
    require(i < f->parsed.rows.size(), "row index out of range");
    const TableFixtureRow& r = f->parsed.rows[i];
    *out = bh_fixture_row{r.n, r.d, r.new_log2, r.old_log2, r.ratio};
  });
}

int bh_fixture_ratio_consistent(const bh_fixture_row* row, double tolerance) {
  if (row == nullptr) return 0;
  const TableFixtureRow r{row->n, row->d, row->new_log2_e4, row->old_log2_e4, row->ratio_e4};
  return ratio_consistent(r, tolerance) ? 1 : 0;
}

size_t bh_fixture_malformed_count(const bh_fixture* f) { return f->parsed.malformed.size(); }

bh_status bh_fixture_malformed_at(const bh_fixture* f, size_t i, size_t* line,
                                  const char** reason) {
  return guarded([&] {
    require_ptr(f, "fixture");
    require(i < f->parsed.malformed.size(), "index out of range");
    if (line) *line = f->parsed.malformed[i].first;
    if (reason) *reason = f->parsed.malformed[i].second.c_str();
  });
}

}  // extern "C"
