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

#include <mpfr.h>

#include <cstdio>

#include "bhcodes/error.hpp"
#include "bhcodes/bounds_engine.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bhcodes;

namespace {

// Pascal's triangle rows up to n.
std::vector<std::vector<mpz_class>> pascal(std::uint32_t n) {
  std::vector<std::vector<mpz_class>> rows(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::uint32_t j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows;
}

// log2 rounded half-up to four decimals. The working precision exceeds the
// operand size so inputs next to a rounding boundary still resolve.
std::string log2_mpfr(const mpq_class& x) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(
      512 + mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2));
  mpfr_t v;
  mpfr_t den;
  mpfr_init2(v, prec);
  mpfr_init2(den, prec);
  mpfr_set_z(v, x.get_num_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den, x.get_den_mpz_t(), MPFR_RNDN);
  mpfr_log2(v, v, MPFR_RNDN);
  mpfr_log2(den, den, MPFR_RNDN);
  mpfr_sub(v, v, den, MPFR_RNDN);
  mpfr_mul_ui(v, v, 10000, MPFR_RNDN);
  mpfr_add_d(v, v, 0.5, MPFR_RNDN);
  mpfr_floor(v, v);
  mpz_class k;
  mpfr_get_z(k.get_mpz_t(), v, MPFR_RNDN);
  mpfr_clear(v);
  mpfr_clear(den);
  const bool negative = k < 0;
  if (negative) k = -k;
  const mpz_class whole = k / 10000;
  const mpz_class frac = k % 10000;
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%s%Zd.%04Zd", negative ? "-" : "", whole.get_mpz_t(),
               frac.get_mpz_t());
  return buf;
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

TEST_CASE("binomial agrees with Pascal's triangle") {
  const auto rows = pascal(300);
  for (std::uint32_t n = 0; n <= 300; ++n) {
    for (std::uint32_t w = 0; w <= n; ++w) REQUIRE(binomial(n, w) == rows[n][w]);
  }
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(17, 0) == 1);
  CHECK(log2_fixed(binomial(280, 140)).substr(0, 6) == "275.60");
  CHECK_THROWS_AS(binomial(3, 4), Error);
}

TEST_CASE("constant-weight bounds") {
  const CBound c6 = c_upper(6, 2);
  CHECK(c6.value == 31);
  CHECK(cw_bound_bc(6, 2, 3, c6) == 1);
  CHECK(cw_bound_bc(6, 2, 0, c6) == 1);

  const CBound c280 = c_upper(280, 2);
  const BigCount big = cw_bound_bc(280, 2, 140, c280);
  CHECK(big == ceil_div(binomial(280, 140), 78680));
  CHECK(log2_fixed(big).substr(0, 6) == "259.34");

  CHECK(cw_bound_gv(4, 1, 2) == 2);
  CHECK(cw_bound_gv(4, 1, 0) == 1);
  CHECK(cw_bound_gv(4, 1, 4) == 1);
  CHECK(cw_bound_gv(23, 3, 23) == 1);

  const WeightClassBound wb = weight_class_bound(4, 1, 2, c_upper(4, 1));
  CHECK(wb.best == 2);
}

TEST_CASE("weight class bounds dominate both constituents") {
  for (std::uint32_t n = 2; n <= 64; ++n) {
    for (std::uint32_t h = 1; h <= 3; ++h) {
      const CBound c = c_upper(n, h);
      for (std::uint32_t w = 0; w <= n; ++w) {
        const WeightClassBound b = weight_class_bound(n, h, w, c);
        REQUIRE(b.best >= b.bc_value);
        REQUIRE(b.best >= b.gv_value);
        REQUIRE(b.best >= 1);
        REQUIRE(b.bc_value == ceil_div(binomial(n, w), c.value));
        // GV denominator: sum_{i<=h} C(w,i) C(n-w,i).
        mpz_class ball = 0;
        for (std::uint32_t i = 0; i <= h && i <= w && i <= n - w; ++i) {
          ball += binomial(w, i) * binomial(n - w, i);
        }
        REQUIRE(b.gv_value == ceil_div(binomial(n, w), ball));
        REQUIRE(b.method == (b.bc_value >= b.gv_value ? WeightMethod::kBoseChowla
                                                      : WeightMethod::kGilbertVarshamov));
      }
    }
  }
}

TEST_CASE("union bound example") {
  const BoundRecord r = union_bound(4, 1, 2, c_upper(4, 1));
  CHECK(r.lower_bound == 2);
  REQUIRE(r.per_weight.size() == 1);
  CHECK(r.per_weight[0].w == 2);

  const BoundRecord big = union_bound(280, 2, 2, c_upper(280, 2));
  CHECK(big.log2_value == "261.1513");
}

TEST_CASE("table rows") {
  CHECK(a_lower(279, 5).log2_value == "261.1513");
  CHECK(a_lower(168, 9).log2_value == "136.0752");
  CHECK(a_lower(150, 11).log2_value == "111.2378");
  CHECK(a_lower(279, 5, UPolicy::kFixed).log2_value == "261.1513");

  const BoundRecord degenerate = a_lower(3, 7);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.lower_bound == 1);
  CHECK_FALSE(degenerate.c_used.has_value());

  CHECK_THROWS_AS(a_lower(10, 2), Error);
  CHECK_THROWS_AS(a_lower(0, 5), Error);
}

TEST_CASE("shift identity and policy dominance") {
  for (std::uint32_t n = 3; n <= 120; ++n) {
    for (std::uint32_t h = 1; h <= 4; ++h) {
      const std::uint32_t d = 2 * h + 1;
      if (d > n) continue;
      const BoundRecord odd = a_lower(n, d);
      const BoundRecord even = a_lower(n + 1, d + 1);
      REQUIRE(odd.lower_bound == even.lower_bound);
      CHECK(odd.even_n == n + 1);
      CHECK(odd.even_d == d + 1);

      const BoundRecord fixed = a_lower(n, d, UPolicy::kFixed);
      REQUIRE(odd.lower_bound >= fixed.lower_bound);
      CHECK(fixed.u_used == ((n + 1) / 2) % (d + 1));

      const CBound c = c_upper(n + 1, h);
      mpz_class every_u = 0;
      for (std::uint32_t u = 0; u < d + 1; ++u) {
        const BoundRecord r = union_bound(n + 1, h, u, c);
        CHECK(r.lower_bound <= odd.lower_bound);
        every_u += r.lower_bound;
      }
      CHECK(every_u >= odd.lower_bound);
    }
  }
}

TEST_CASE("sphere packing and density") {
  CHECK(sphere_packing(7, 1) == 16);
  CHECK(sphere_packing(10, 0) == 1024);
  CHECK(sphere_packing(23, 3) == 4096);

  for (std::uint32_t n = 5; n <= 200; n += 13) {
    for (std::uint32_t d : {3u, 5u, 7u, 9u}) {
      if (d > n) continue;
      CHECK(density_ratio_exact(n, d) <= 1);
      CHECK(density_ratio_exact(n, d) > 0);
    }
  }
  const mpq_class expected = mpq_class(a_lower(279, 5).lower_bound) / sphere_packing(279, 2);
  CHECK(density_ratio_exact(279, 5) == expected);
  CHECK_FALSE(density_ratio(279, 5).empty());
}

TEST_CASE("log2 anchors") {
  CHECK(log2_fixed(BigCount(8)) == "3.0000");
  CHECK(log2_fixed(BigCount(78680)) == "16.2637");
  CHECK(log2_fixed(BigCount(6)) == "2.5850");
  CHECK(log2_fixed(BigCount(1)) == "0.0000");
  CHECK(log2_fixed(BigRational(1, 3)) == "-1.5850");
  CHECK_THROWS_AS(log2_fixed(BigCount(0)), Error);
}

TEST_CASE("log2 matches MPFR on random inputs") {
  test::Rng rng(2024);
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(17);
  for (int i = 0; i < 300; ++i) {
    const auto bits = 1 + rng.below(2000);
    mpz_class x = gen.get_z_bits(bits);
    if (x == 0) x = 1;
    const std::string got = log2_fixed(x);
    REQUIRE(got == log2_mpfr(mpq_class(x)));
    if (i % 10 == 0) REQUIRE(got == detail::log2_fixed_exact(mpq_class(x)));
  }
  for (int i = 0; i < 100; ++i) {
    mpq_class x(gen.get_z_bits(1 + rng.below(300)) + 1, gen.get_z_bits(1 + rng.below(300)) + 1);
    x.canonicalize();
    REQUIRE(log2_fixed(x) == log2_mpfr(x));
  }
}

TEST_CASE("log2 near rounding boundaries") {
  // 2^(k + 0.5e-4) sits on a rounding boundary; its integer neighbours probe
  // both sides of it.
  for (long k : {40L, 123L, 999L, 4567L}) {
    mpfr_t v;
    mpfr_init2(v, 8192);
    mpfr_set_si(v, 20000 * k + 1, MPFR_RNDN);
    mpfr_div_ui(v, v, 20000, MPFR_RNDN);
    mpfr_exp2(v, v, MPFR_RNDN);
    mpz_class base;
    mpfr_get_z(base.get_mpz_t(), v, MPFR_RNDD);
    mpfr_clear(v);
    for (int delta = -2; delta <= 2; ++delta) {
      const mpz_class x = base + delta;
      CAPTURE(k);
      CAPTURE(delta);
      CHECK(log2_fixed(x) == log2_mpfr(mpq_class(x)));
      CHECK(log2_fixed(x) == detail::log2_fixed_exact(mpq_class(x)));
    }
  }
}

TEST_CASE("log2 is monotone") {
  test::Rng rng(5);
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(23);
  auto as_e4 = [](const std::string& s) {
    double v = 0;
    std::sscanf(s.c_str(), "%lf", &v);
    return v;
  };
  for (int i = 0; i < 300; ++i) {
    mpz_class a = gen.get_z_bits(1 + rng.below(200)) + 1;
    mpz_class b = a + gen.get_z_bits(1 + rng.below(40));
    CHECK(as_e4(log2_fixed(a)) <= as_e4(log2_fixed(b)));
  }
}
