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
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bhcodes/algebra.hpp"

namespace bhcodes {

/// Rows of the minimal-unit-count table, keyed by how q compares to n + h.
enum class MuCase {
  kQGeNPlusH,   // q >= n + h
  kStrictEven,  // n < q < n + h, n + h - q even
  kStrictOdd,   // n < q < n + h, n + h - q odd
  kEqEven,      // q == n, h even
  kEqOdd,       // q == n, h odd (h >= 3)
};

std::string_view to_string(MuCase c) noexcept;

struct Factor {
  Polynomial poly;  // monic irreducible
  int multiplicity = 1;
};

/// A polynomial together with its factorization into monic irreducibles.
struct FactoredPolynomial {
  Polynomial product;
  std::vector<Factor> factors;
};

struct MuResult {
  mpz_class value;
  MuCase case_tag = MuCase::kQGeNPlusH;
  std::optional<Polynomial> witness;
};

/// Monic irreducible factorization by trial division. Only meant for small
/// q and degree. The leading coefficient of p is dropped.
std::vector<Factor> factor_polynomial(const Polynomial& p);

/// Units in F_q[X]/P given P's factorization: product of
/// q^(d(e-1)) (q^d - 1) over irreducible factors of degree d, multiplicity e.
mpz_class mu_of_factors(std::uint32_t q, std::span<const Factor> factors);

/// #(F_q[X]/P)^*. deg P >= 1.
mpz_class mu_of_poly(const Polynomial& p);

/// Which row applies. Throws kImpossible for q == n, h == 1.
MuCase mu_case(std::uint32_t q, std::uint32_t n, std::uint32_t h);

/// Least #(F_q[X]/P)^* over degree-h P with no root in a set of n points.
/// Requires 1 <= n <= q, h >= 1 and q a prime power. Past h < q, throws
/// kUnsupported once the row needs more distinct quadratics than exist.
MuResult mu_closed_form(std::uint32_t q, std::uint32_t n, std::uint32_t h);

/// Exhaustive minimum over all monic P of degree h without roots in
/// `points`. Refuses when q^h exceeds the budget (0 = default budget).
/// The witness is the first minimizer in enumeration order.
MuResult mu_brute_force(const Field& field, std::span<const FieldElement> points,
                        int h, std::uint64_t budget = 0);

/// Builds a degree-h polynomial without roots in `points` attaining the
/// closed-form minimum: excluded points as linear factors (the least one
/// squared when the parity calls for it), padded with the first distinct
/// irreducible quadratics, plus the first irreducible cubic when
/// points cover the whole field and h is odd.
FactoredPolynomial construct_optimal_poly(const Field& field,
                                          std::span<const FieldElement> points,
                                          int h);

enum class CRoute {
  kShifted,  // q = n - 1 prime power, scalar quotient of a degree h+1 ring
  kDirect,   // q = least usable prime power >= n, degree h ring
};

std::string_view to_string(CRoute r) noexcept;

/// Upper bound on the least abelian group order holding a B_h-sequence of
/// length n.
struct CBound {
  std::uint32_t n = 0;
  std::uint32_t h = 0;
  mpz_class value;
  CRoute route = CRoute::kDirect;
  PrimePower q_used;
  /// Value of the losing route when both were available.
  std::optional<mpz_class> other_route_value;
};

/// Requires n >= 2, h >= 1.
CBound c_upper(std::uint32_t n, std::uint32_t h);

}  // namespace bhcodes
