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

// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "bhcodes/bhcodes.h"
#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  bh_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status strings and errors") {
  CHECK(std::string(bh_version()).size() > 0);
  CHECK(std::string(bh_status_string(BH_OK)) == "ok");
  CHECK(std::string(bh_status_string(BH_ERR_BUDGET)).size() > 0);

  bh_bound* b = nullptr;
  CHECK(bh_bound_compute(10, 2, BH_POLICY_BEST, &b) == BH_ERR_INVALID_ARGUMENT);
  CHECK(b == nullptr);
  CHECK(std::string(bh_last_error()).find("distance") != std::string::npos);
  CHECK(bh_bound_compute(10, 5, BH_POLICY_BEST, nullptr) == BH_ERR_INVALID_ARGUMENT);
  CHECK(bh_default_budget() > 0);
}

TEST_CASE("bounds") {
  bh_bound* b = nullptr;
  REQUIRE(bh_bound_compute(279, 5, BH_POLICY_FIXED, &b) == BH_OK);
  CHECK(std::string(bh_bound_log2(b)) == "261.1513");
  CHECK(bh_bound_n(b) == 279);
  CHECK(bh_bound_d(b) == 5);
  CHECK(bh_bound_even_n(b) == 280);
  CHECK(bh_bound_even_d(b) == 6);
  CHECK(bh_bound_u(b) == 2);
  CHECK(bh_bound_degenerate(b) == 0);
  CHECK(std::string(bh_bound_c_value(b)) == "78680");
  CHECK(bh_bound_c_route(b) == BH_ROUTE_DIRECT);
  CHECK(bh_bound_c_q(b) == 281);
  CHECK(bh_bound_weight_count(b) == 47);
  bh_weight_info info{};
  REQUIRE(bh_bound_weight(b, 0, &info) == BH_OK);
  CHECK(info.w == 2);
  CHECK(bh_bound_weight(b, 47, &info) == BH_ERR_INVALID_ARGUMENT);
  bh_bound_free(b);

  REQUIRE(bh_bound_compute(3, 7, BH_POLICY_BEST, &b) == BH_OK);
  CHECK(bh_bound_degenerate(b) == 1);
  CHECK(std::string(bh_bound_value(b)) == "1");
  CHECK(std::string(bh_bound_c_value(b)).empty());
  bh_bound_free(b);

  char* value = nullptr;
  bh_route route{};
  uint32_t q = 0;
  REQUIRE(bh_c_upper(6, 2, &value, &route, &q) == BH_OK);
  CHECK(take(value) == "31");
  CHECK(route == BH_ROUTE_SHIFTED);
  CHECK(q == 5);

  char* s = nullptr;
  REQUIRE(bh_binomial(4, 2, &s) == BH_OK);
  CHECK(take(s) == "6");
  REQUIRE(bh_sphere_packing(23, 3, &s) == BH_OK);
  CHECK(take(s) == "4096");
  REQUIRE(bh_density_ratio(279, 5, &s) == BH_OK);
  CHECK_FALSE(take(s).empty());
  REQUIRE(bh_log2_fixed("78680", nullptr, &s) == BH_OK);
  CHECK(take(s) == "16.2637");
  REQUIRE(bh_log2_fixed("1", "3", &s) == BH_OK);
  CHECK(take(s) == "-1.5850");
  CHECK(bh_log2_fixed("abc", nullptr, &s) == BH_ERR_PARSE);
  CHECK(bh_log2_fixed("0", nullptr, &s) == BH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("mu") {
  bh_mu* m = nullptr;
  REQUIRE(bh_mu_closed_form(281, 280, 2, &m) == BH_OK);
  CHECK(std::string(bh_mu_value(m)) == "78680");
  CHECK(std::string(bh_mu_case(m)) == "STRICT_ODD");
  bh_mu_free(m);

  CHECK(bh_mu_closed_form(3, 3, 1, &m) == BH_ERR_IMPOSSIBLE);
  CHECK(bh_mu_closed_form(6, 3, 1, &m) == BH_ERR_INVALID_ARGUMENT);

  REQUIRE(bh_mu_brute_force(3, 3, 2, 0, &m) == BH_OK);
  CHECK(std::string(bh_mu_value(m)) == "8");
  CHECK(std::string(bh_mu_witness(m)) == "X^2+1");
  bh_mu_free(m);
  CHECK(bh_mu_brute_force(7, 7, 6, 100, &m) == BH_ERR_BUDGET);
  CHECK(bh_last_budget() == 100);

  REQUIRE(bh_mu_construct(5, 5, 2, &m) == BH_OK);
  CHECK(std::string(bh_mu_value(m)) == "24");
  CHECK(std::string(bh_mu_case(m)) == "EQ_EVEN");
  bh_mu_free(m);
}

TEST_CASE("sequences and codes") {
  bh_sequence* s = nullptr;
  REQUIRE(bh_sequence_build(5, 2, 5, BH_MODE_B, &s) == BH_OK);
  CHECK(bh_sequence_length(s) == 6);
  CHECK(bh_sequence_h(s) == 2);
  CHECK(bh_sequence_q(s) == 5);
  CHECK(bh_sequence_mode(s) == BH_MODE_B);
  CHECK(std::string(bh_sequence_group_order(s)) == "31");
  CHECK(std::string(bh_sequence_element(s, 0)) == "1");
  CHECK(bh_sequence_element(s, 6) == nullptr);
  int ok = 0;
  uint64_t multisets = 0;
  char* cex = nullptr;
  REQUIRE(bh_sequence_verify(s, 0, &ok, &multisets, &cex) == BH_OK);
  CHECK(ok == 1);
  CHECK(multisets == 21);
  CHECK(cex == nullptr);
  CHECK(bh_sequence_verify(s, 5, &ok, &multisets, &cex) == BH_ERR_BUDGET);
  char* e = nullptr;
  REQUIRE(bh_sequence_phi(s, "000000", &e) == BH_OK);
  CHECK(take(e) == "1");
  CHECK(bh_sequence_phi(s, "0101", &e) == BH_ERR_INVALID_ARGUMENT);
  bh_sequence_free(s);

  REQUIRE(bh_sequence_choose(13, 1, &s) == BH_OK);
  CHECK(std::string(bh_sequence_group_order(s)) == "13");
  bh_code* c = nullptr;
  REQUIRE(bh_code_constant_weight(s, 6, 0, &c) == BH_OK);
  CHECK(bh_code_size(c) >= 132);
  CHECK(std::string(bh_code_pigeonhole_floor(c)) == "132");
  CHECK(bh_code_claimed_w(c) == 6);
  CHECK(bh_code_claimed_d(c) == 4);
  int verified = 0;
  int32_t dmin = 0;
  char* reason = nullptr;
  REQUIRE(bh_code_verify(c, 0, &verified, &dmin, &reason) == BH_OK);
  CHECK(verified == 1);
  CHECK(dmin >= 4);
  CHECK(bh_code_verified(c) == 1);
  take(reason);

  char buf[32];
  REQUIRE(bh_code_word(c, 0, buf, sizeof buf) == BH_OK);
  CHECK(std::strlen(buf) == 13);
  CHECK(bh_code_word(c, 0, buf, 5) == BH_ERR_INVALID_ARGUMENT);

  char* text = nullptr;
  REQUIRE(bh_code_export(c, &text) == BH_OK);
  bh_code* back = nullptr;
  REQUIRE(bh_code_parse(text, &back) == BH_OK);
  bh_string_free(text);
  CHECK(bh_code_size(back) == bh_code_size(c));
  CHECK(bh_code_verified(back) == 0);
  bh_code_free(back);
  bh_code_free(c);

  REQUIRE(bh_code_union(s, 1, 0, &c) == BH_OK);
  CHECK(bh_code_claimed_w(c) == -1);
  bh_code_free(c);
  CHECK(bh_code_parse("garbage", &c) == BH_ERR_PARSE);
  bh_sequence_free(s);

  REQUIRE(bh_sequence_choose(30, 1, &s) == BH_OK);
  CHECK(bh_code_constant_weight(s, 15, 1000, &c) == BH_ERR_BUDGET);
  CHECK(bh_last_budget() == 1000);
  bh_sequence_free(s);
}

TEST_CASE("fixture") {
  bh_fixture* f = nullptr;
  REQUIRE(bh_fixture_parse("n\td\tnew\told\tratio\n279\t5\t261.1513\t261.0000\t1.1106\nbad\n",
                           &f) == BH_OK);
  CHECK(bh_fixture_row_count(f) == 1);
  bh_fixture_row row{};
  REQUIRE(bh_fixture_row_at(f, 0, &row) == BH_OK);
  CHECK(row.new_log2_e4 == 2611513);
  CHECK(bh_fixture_ratio_consistent(&row, 0.0005) == 1);
  CHECK(bh_fixture_malformed_count(f) == 1);
  size_t line = 0;
  const char* why = nullptr;
  REQUIRE(bh_fixture_malformed_at(f, 0, &line, &why) == BH_OK);
  CHECK(line == 3);
  bh_fixture_free(f);

  CHECK(bh_fixture_load("/nonexistent.tsv", &f) == BH_ERR_IO);
}
