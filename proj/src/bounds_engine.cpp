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

#include "bhcodes/bounds_engine.hpp"

#include <cmath>
#include <cstdio>

#include "bhcodes/error.hpp"

namespace bhcodes {

std::string_view to_string(UPolicy p) noexcept {
  return p == UPolicy::kFixed ? "fixed" : "best";
}

std::string_view to_string(WeightMethod m) noexcept {
  return m == WeightMethod::kBoseChowla ? "BC" : "GV";
}

namespace {

constexpr std::uint32_t kMaxBinomialN = 10000;

BigCount ceil_div(const BigCount& a, const BigCount& b) {
  BigCount q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// C(n, k) for k = 0..n, built by the multiplicative recurrence.
std::vector<BigCount> binomial_row(std::uint32_t n) {
  std::vector<BigCount> row(std::size_t{n} + 1);
  row[0] = 1;
  for (std::uint32_t k = 1; k <= n; ++k) {
    row[k] = row[k - 1] * (n - k + 1);
    mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(), k);
  }
  return row;
}

BigCount gv_denominator(std::uint32_t n, std::uint32_t h, std::uint32_t w) {
  BigCount sum = 0;
  for (std::uint32_t i = 0; i <= h && i <= w && i <= n - w; ++i) {
    sum += binomial(w, i) * binomial(n - w, i);
  }
  return sum;
}

WeightClassBound make_weight_bound(std::uint32_t n, std::uint32_t h, std::uint32_t w,
                                   const BigCount& choose, const BigCount& group_order) {
  WeightClassBound b;
  b.n = n;
  b.h = h;
  b.w = w;
  b.bc_value = ceil_div(choose, group_order);
  b.gv_value = ceil_div(choose, gv_denominator(n, h, w));
  if (b.gv_value > b.bc_value) {
    b.best = b.gv_value;
    b.method = WeightMethod::kGilbertVarshamov;
  } else {
    b.best = b.bc_value;
    b.method = WeightMethod::kBoseChowla;
  }
  return b;
}

BoundRecord record_for_class(std::uint32_t n, std::uint32_t h, std::uint32_t u,
                             const std::vector<WeightClassBound>& all, const CBound& c) {
  const std::uint32_t d = 2 * h + 2;
  BoundRecord r;
  r.n = n;
  r.d = d;
  r.even_n = n;
  r.even_d = d;
  r.u_used = u;
  r.c_used = c;
  r.lower_bound = 0;
  for (std::uint32_t w = u; w <= n; w += d) {
    r.per_weight.push_back(all[w]);
    r.lower_bound += all[w].best;
  }
  // An empty class still holds a single codeword of any weight.
  if (r.lower_bound == 0) r.lower_bound = 1;
  r.log2_value = log2_fixed(r.lower_bound);
  return r;
}

std::vector<WeightClassBound> all_weight_bounds(std::uint32_t n, std::uint32_t h,
                                                const CBound& c) {
  const auto row = binomial_row(n);
  std::vector<WeightClassBound> all;
  all.reserve(std::size_t{n} + 1);
  for (std::uint32_t w = 0; w <= n; ++w) {
    all.push_back(make_weight_bound(n, h, w, row[w], c.value));
  }
  return all;
}

}  // namespace

BigCount binomial(std::uint32_t n, std::uint32_t w) {
  require(n <= kMaxBinomialN, "binomial: n exceeds 10^4");
  require(w <= n, "binomial: need 0 <= w <= n");
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, w);
  return out;
}

BigCount cw_bound_bc(std::uint32_t n, std::uint32_t w, const BigCount& group_order) {
  require(group_order >= 1, "group order must be positive");
  return ceil_div(binomial(n, w), group_order);
}

BigCount cw_bound_bc(std::uint32_t n, std::uint32_t /*h*/, std::uint32_t w, const CBound& c) {
  return cw_bound_bc(n, w, c.value);
}

BigCount cw_bound_gv(std::uint32_t n, std::uint32_t h, std::uint32_t w) {
  require(w <= n, "cw_bound_gv: need 0 <= w <= n");
  return ceil_div(binomial(n, w), gv_denominator(n, h, w));
}

WeightClassBound weight_class_bound(std::uint32_t n, std::uint32_t h, std::uint32_t w,
                                    const CBound& c) {
  require(c.value >= 1, "c bound must be positive");
  return make_weight_bound(n, h, w, binomial(n, w), c.value);
}

BoundRecord union_bound(std::uint32_t n, std::uint32_t h, std::uint32_t u, const CBound& c) {
  require(u < 2 * h + 2, "residue u must be below 2h+2");
  require(c.value >= 1, "c bound must be positive");
  return record_for_class(n, h, u, all_weight_bounds(n, h, c), c);
}

BoundRecord a_lower(std::uint32_t n, std::uint32_t d, UPolicy policy) {
  require(d >= 3, "minimum distance must be at least 3");
  require(n >= 1, "length must be at least 1");
  const bool odd = d % 2 == 1;
  const std::uint32_t even_n = odd ? n + 1 : n;
  const std::uint32_t even_d = odd ? d + 1 : d;

  if (d > n) {
    BoundRecord r;
    r.n = n;
    r.d = d;
    r.even_n = even_n;
    r.even_d = even_d;
    r.lower_bound = 1;
    r.log2_value = log2_fixed(r.lower_bound);
    r.policy = policy;
    r.degenerate = true;
    return r;
  }

  const std::uint32_t h = (even_d - 2) / 2;
  const CBound c = c_upper(even_n, h);
  const auto all = all_weight_bounds(even_n, h, c);

  const std::uint32_t fixed_u = (even_n / 2) % even_d;
  std::uint32_t u = fixed_u;
  if (policy == UPolicy::kBest) {
    BigCount best_total = -1;
    for (std::uint32_t k = 0; k < even_d; ++k) {
      // Start at the heuristic residue so ties keep it.
      const std::uint32_t cand = (fixed_u + k) % even_d;
      BigCount total = 0;
      for (std::uint32_t w = cand; w <= even_n; w += even_d) total += all[w].best;
      if (total > best_total) {
        best_total = total;
        u = cand;
      }
    }
  }
  BoundRecord r = record_for_class(even_n, h, u, all, c);
  r.n = n;
  r.d = d;
  r.policy = policy;
  return r;
}

BigRational sphere_packing(std::uint32_t n, std::uint32_t h) {
  require(h <= n, "sphere_packing: need h <= n");
  BigCount ball = 0;
  for (std::uint32_t i = 0; i <= h; ++i) ball += binomial(n, i);
  BigCount space;
  mpz_ui_pow_ui(space.get_mpz_t(), 2, n);
  BigRational out(space, ball);
  out.canonicalize();
  return out;
}

BigRational density_ratio_exact(std::uint32_t n, std::uint32_t d) {
  require(d % 2 == 1, "density_ratio: d must be odd");
  const BoundRecord r = a_lower(n, d, UPolicy::kBest);
  BigRational ratio = BigRational(r.lower_bound) / sphere_packing(n, std::min(n, (d - 1) / 2));
  ratio.canonicalize();
  return ratio;
}

std::string density_ratio(std::uint32_t n, std::uint32_t d) {
  const mpf_class value(density_ratio_exact(n, d), 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.6Fg", value.get_mpf_t());
  return buf;
}

namespace {

std::string format_e4(long k) {
  const bool negative = k < 0;
  const unsigned long a = static_cast<unsigned long>(negative ? -k : k);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lu.%04lu", negative ? "-" : "", a / 10000, a % 10000);
  return buf;
}

std::string log2_impl(const BigRational& x_in, bool allow_estimate) {
  BigRational x = x_in;
  x.canonicalize();
  require(x > 0, "log2_fixed: argument must be positive");
  const BigCount& num = x.get_num();
  const BigCount& den = x.get_den();

  // floor(10^4 log2 x + 1/2) is the largest k with x^(2*10^4) >= 2^(2k-1).
  constexpr unsigned long kPower = 20000;
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
  const double approx = static_cast<double>(en - ed) + std::log2(mn) - std::log2(md);
  const double scaled = approx * 1e4;
  long k = static_cast<long>(std::floor(scaled + 0.5));
  // The estimate is off by far less than 1e-6 units for |log2 x| < 2^20, so
  // only near-ties need the exact comparison.
  const bool near_tie = std::fabs(scaled - std::floor(scaled) - 0.5) < 1e-6;
  if (allow_estimate && !near_tie && std::fabs(approx) < 1048576.0) return format_e4(k);

  BigCount num_pow;
  BigCount den_pow;
  mpz_pow_ui(num_pow.get_mpz_t(), num.get_mpz_t(), kPower);
  mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), kPower);
  BigCount lhs;
  BigCount rhs;
  auto holds = [&](long cand) {
    const long e = 2 * cand - 1;
    if (e >= 0) {
      mpz_mul_2exp(rhs.get_mpz_t(), den_pow.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
      return num_pow >= rhs;
    }
    mpz_mul_2exp(lhs.get_mpz_t(), num_pow.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return lhs >= den_pow;
  };
  while (!holds(k)) --k;
  while (holds(k + 1)) ++k;

  return format_e4(k);
}

}  // namespace

std::string log2_fixed(const BigCount& x) { return log2_fixed(BigRational(x)); }

std::string log2_fixed(const BigRational& x) { return log2_impl(x, true); }

std::string detail::log2_fixed_exact(const BigRational& x) { return log2_impl(x, false); }

}  // namespace bhcodes
