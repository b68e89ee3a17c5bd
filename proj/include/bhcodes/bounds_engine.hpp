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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bhcodes/mu_bounds.hpp"

namespace bhcodes {

using BigCount = mpz_class;
using BigRational = mpq_class;

/// How the residue class u of the weight-class union is picked.
enum class UPolicy {
  kFixed,  // u = floor(N/2) mod d for the even-distance problem of length N
  kBest,   // every residue, keep the largest total
};

enum class WeightMethod { kBoseChowla, kGilbertVarshamov };

std::string_view to_string(UPolicy p) noexcept;
std::string_view to_string(WeightMethod m) noexcept;

/// Lower bounds on A(n, 2h+2, w) for one weight.
struct WeightClassBound {
  std::uint32_t n = 0;
  std::uint32_t h = 0;
  std::uint32_t w = 0;
  BigCount bc_value;  // ceil(C(n,w) / c(n,h))
  BigCount gv_value;  // ceil(C(n,w) / sum_{i<=h} C(w,i) C(n-w,i))
  BigCount best;
  WeightMethod method = WeightMethod::kBoseChowla;  // ties go to BoseChowla
};

/// One (n, d) cell. Odd d is solved as the even problem (n+1, d+1).
struct BoundRecord {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t even_n = 0;
  std::uint32_t even_d = 0;
  BigCount lower_bound;
  std::string log2_value;
  std::uint32_t u_used = 0;
  UPolicy policy = UPolicy::kBest;
  /// Weights w in [0, even_n] with w == u_used (mod even_d).
  std::vector<WeightClassBound> per_weight;
  /// Absent only for the degenerate d > n case.
  std::optional<CBound> c_used;
  bool degenerate = false;
};

/// Exact C(n, w) for 0 <= w <= n <= 10^4.
BigCount binomial(std::uint32_t n, std::uint32_t w);

BigCount cw_bound_bc(std::uint32_t n, std::uint32_t h, std::uint32_t w, const CBound& c);
/// Same with an explicit group order.
BigCount cw_bound_bc(std::uint32_t n, std::uint32_t w, const BigCount& group_order);
BigCount cw_bound_gv(std::uint32_t n, std::uint32_t h, std::uint32_t w);
WeightClassBound weight_class_bound(std::uint32_t n, std::uint32_t h, std::uint32_t w,
                                    const CBound& c);

/// A(n, 2h+2) >= sum over w == u (mod 2h+2) of the per-weight best.
BoundRecord union_bound(std::uint32_t n, std::uint32_t h, std::uint32_t u, const CBound& c);

/// Lower bound on A(n, d), d >= 3.
BoundRecord a_lower(std::uint32_t n, std::uint32_t d, UPolicy policy = UPolicy::kBest);

/// 2^n / sum_{i<=h} C(n, i), exact.
BigRational sphere_packing(std::uint32_t n, std::uint32_t h);

/// a_lower(n, d) / sphere_packing(n, (d-1)/2) as an exact rational; d odd.
BigRational density_ratio_exact(std::uint32_t n, std::uint32_t d);
/// Same, printed with 6 significant digits.
std::string density_ratio(std::uint32_t n, std::uint32_t d);

/// log2(x) rounded half-up to 4 decimals; values near a rounding boundary are
/// decided in exact arithmetic.
std::string log2_fixed(const BigCount& x);
std::string log2_fixed(const BigRational& x);

namespace detail {
/// log2_fixed without the floating-point shortcut.
std::string log2_fixed_exact(const BigRational& x);
}  // namespace detail

}  // namespace bhcodes
