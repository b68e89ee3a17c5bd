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

#include "bhcodes/mu_bounds.hpp"

#include <algorithm>
#include <string>

#include "bhcodes/error.hpp"

namespace bhcodes {

std::string_view to_string(MuCase c) noexcept {
  switch (c) {
    case MuCase::kQGeNPlusH: return "Q_GE_N_PLUS_H";
    case MuCase::kStrictEven: return "STRICT_EVEN";
    case MuCase::kStrictOdd: return "STRICT_ODD";
    case MuCase::kEqEven: return "EQ_EVEN";
    case MuCase::kEqOdd: return "EQ_ODD";
  }
  return "?";
}

std::string_view to_string(CRoute r) noexcept {
  return r == CRoute::kShifted ? "shifted" : "direct";
}

namespace {

mpz_class pow_ui(std::uint64_t base, std::uint64_t exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

// Divides out every factor in `irreducibles` (sorted by degree) and returns
// the monic factorization of p.
std::vector<Factor> factor_with(const Polynomial& p,
                                const std::vector<Polynomial>& irreducibles) {
  std::vector<Factor> out;
  Polynomial rest = p.monic();
  for (const Polynomial& q : irreducibles) {
    if (2 * q.degree() > rest.degree()) break;
    int multiplicity = 0;
    for (;;) {
      DivMod qr = divmod(rest, q);
      if (!qr.remainder.is_zero()) break;
      rest = std::move(qr.quotient);
      ++multiplicity;
    }
    if (multiplicity > 0) out.push_back({q, multiplicity});
  }
  // No factor of degree <= deg/2 is left, so the rest is irreducible.
  if (rest.degree() > 0) out.push_back({std::move(rest), 1});
  return out;
}

std::vector<Polynomial> irreducibles_up_to(const Field& field, int max_degree) {
  std::vector<Polynomial> out;
  for (int d = 1; d <= max_degree; ++d) {
    IrreducibleEnumerator it(field, d);
    while (auto p = it.next()) out.push_back(std::move(*p));
  }
  return out;
}

void check_points(const Field& field, std::span<const FieldElement> points) {
  std::vector<bool> seen(field.size(), false);
  for (FieldElement a : points) {
    require(a.value < field.size(), "point outside the field");
    require(!seen[a.value], "points must be distinct");
    seen[a.value] = true;
  }
}

}  // namespace

std::vector<Factor> factor_polynomial(const Polynomial& p) {
  require(p.degree() >= 1, "factor_polynomial: degree must be at least 1");
  const Field& field = p.field();
  std::vector<Factor> out;
  Polynomial rest = p.monic();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    IrreducibleEnumerator it(field, d);
    while (2 * d <= rest.degree()) {
      auto q = it.next();
      if (!q) break;
      int multiplicity = 0;
      for (;;) {
        DivMod qr = divmod(rest, *q);
        if (!qr.remainder.is_zero()) break;
        rest = std::move(qr.quotient);
        ++multiplicity;
      }
      if (multiplicity > 0) out.push_back({*q, multiplicity});
    }
  }
  if (rest.degree() > 0) out.push_back({std::move(rest), 1});
  return out;
}

mpz_class mu_of_factors(std::uint32_t q, std::span<const Factor> factors) {
  mpz_class value = 1;
  for (const Factor& f : factors) {
    const auto d = static_cast<std::uint64_t>(f.poly.degree());
    value *= pow_ui(q, d * static_cast<std::uint64_t>(f.multiplicity - 1)) *
             (pow_ui(q, d) - 1);
  }
  return value;
}

mpz_class mu_of_poly(const Polynomial& p) {
  require(p.degree() >= 1, "mu_of_poly: degree must be at least 1");
  auto factors = factor_polynomial(p);
  return mu_of_factors(p.field().size(), factors);
}

namespace {

// Row of the table plus the number of distinct quadratics it calls for.
std::pair<MuCase, std::uint64_t> mu_row(std::uint32_t q, std::uint32_t n, std::uint32_t h) {
  require(is_prime_power(q).has_value(), "q = " + std::to_string(q) + " is not a prime power");
  require(n >= 1 && n <= q, "need 1 <= n <= q");
  require(h >= 1, "need h >= 1");
  MuCase tag;
  std::uint64_t quadratics = 0;
  const std::uint64_t excess = std::uint64_t{n} + h - std::min<std::uint64_t>(q, n + h);
  if (excess == 0) {
    tag = MuCase::kQGeNPlusH;
  } else if (n < q) {
    tag = excess % 2 == 0 ? MuCase::kStrictEven : MuCase::kStrictOdd;
    quadratics = excess / 2;
  } else if (h % 2 == 0) {
    tag = MuCase::kEqEven;
    quadratics = h / 2;
  } else if (h == 1) {
    throw Error(ErrorCode::kImpossible,
                "IMPOSSIBLE: a linear polynomial has a root in every point set "
                "covering F_" + std::to_string(q));
  } else {
    tag = MuCase::kEqOdd;
    quadratics = (h - 3) / 2;
  }
  return {tag, quadratics};
}

}  // namespace

MuCase mu_case(std::uint32_t q, std::uint32_t n, std::uint32_t h) {
  const auto [tag, quadratics] = mu_row(q, n, h);
  // Beyond h < q the table still holds while distinct quadratics last.
  if (quadratics > std::uint64_t{q} * (q - 1) / 2) {
    throw Error(ErrorCode::kUnsupported,
                "mu(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(h) +
                    ") needs more irreducible quadratics than GF(" + std::to_string(q) +
                    ") has");
  }
  return tag;
}

MuResult mu_closed_form(std::uint32_t q, std::uint32_t n, std::uint32_t h) {
  MuResult r;
  r.case_tag = mu_case(q, n, h);
  const mpz_class qm1 = q - 1;
  const mpz_class q2m1 = pow_ui(q, 2) - 1;
  const auto k = static_cast<std::uint64_t>(n) + h - q;  // only used when q < n + h
  auto pow = [](const mpz_class& b, std::uint64_t e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
  };
  switch (r.case_tag) {
    case MuCase::kQGeNPlusH:
      r.value = pow(qm1, h);
      break;
    case MuCase::kStrictEven:
      r.value = pow(qm1, q - n) * pow(q2m1, k / 2);
      break;
    case MuCase::kStrictOdd:
      r.value = mpz_class(q) * pow(qm1, q - n) * pow(q2m1, (k - 1) / 2);
      break;
    case MuCase::kEqEven:
      r.value = pow(q2m1, h / 2);
      break;
    case MuCase::kEqOdd:
      r.value = pow(q2m1, (h - 3) / 2) * (pow_ui(q, 3) - 1);
      break;
  }
  return r;
}

MuResult mu_brute_force(const Field& field, std::span<const FieldElement> points, int h,
                        std::uint64_t budget) {
  budget = resolve_budget(budget);
  const std::uint32_t q = field.size();
  require(h >= 1, "need h >= 1");
  check_points(field, points);
  const mpz_class space = pow_ui(q, static_cast<std::uint64_t>(h));
  if (space > budget) {
    throw BudgetExceeded("mu_brute_force", space.fits_ulong_p() ? space.get_ui() : ~0ull,
                         budget);
  }
  const MuCase tag = mu_row(q, static_cast<std::uint32_t>(points.size()),
                            static_cast<std::uint32_t>(h)).first;
  const auto irreducibles = irreducibles_up_to(field, h / 2);

  std::optional<MuResult> best;
  const std::uint64_t total = space.get_ui();
  for (std::uint64_t index = 0; index < total; ++index) {
    Polynomial p = monic_from_index(field, h, index);
    bool has_root = false;
    for (FieldElement a : points) {
      if (poly_eval(p, a).value == 0) {
        has_root = true;
        break;
      }
    }
    if (has_root) continue;
    const auto factors = factor_with(p, irreducibles);
    mpz_class value = mu_of_factors(q, factors);
    if (!best || value < best->value) best = MuResult{std::move(value), tag, std::move(p)};
  }
  // mu_case already rejected the only parameter set without candidates.
  return *best;
}

FactoredPolynomial construct_optimal_poly(const Field& field,
                                          std::span<const FieldElement> points, int h) {
  const std::uint32_t q = field.size();
  check_points(field, points);
  const auto n = static_cast<std::uint32_t>(points.size());
  const MuCase tag = mu_case(q, n, static_cast<std::uint32_t>(h));

  std::vector<bool> in_set(q, false);
  for (FieldElement a : points) in_set[a.value] = true;
  std::vector<FieldElement> excluded;
  for (FieldElement a : field.elements()) {
    if (!in_set[a.value]) excluded.push_back(a);
  }

  std::vector<Factor> factors;
  int linear_degree = 0;
  int quadratics = 0;
  bool cubic = false;
  switch (tag) {
    case MuCase::kQGeNPlusH:
      for (int i = 0; i < h; ++i) factors.push_back({Polynomial::linear(field, excluded[i]), 1});
      linear_degree = h;
      break;
    case MuCase::kStrictEven:
    case MuCase::kStrictOdd: {
      for (FieldElement b : excluded) factors.push_back({Polynomial::linear(field, b), 1});
      linear_degree = static_cast<int>(excluded.size());
      if (tag == MuCase::kStrictOdd) {
        factors.front().multiplicity = 2;
        ++linear_degree;
      }
      quadratics = (h - linear_degree) / 2;
      break;
    }
    case MuCase::kEqEven:
      quadratics = h / 2;
      break;
    case MuCase::kEqOdd:
      quadratics = (h - 3) / 2;
      cubic = true;
      break;
  }

  if (quadratics > 0) {
    IrreducibleEnumerator it(field, 2);
    for (int i = 0; i < quadratics; ++i) {
      auto p = it.next();
      if (!p) {
        throw Error(ErrorCode::kUnsupported,
                    "not enough irreducible quadratics over GF(" + std::to_string(q) + ")");
      }
      factors.push_back({std::move(*p), 1});
    }
  }
  if (cubic) factors.push_back({find_irreducible(field, 3), 1});

  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });

  Polynomial product = Polynomial::constant(field, field.one());
  for (const Factor& f : factors) {
    for (int i = 0; i < f.multiplicity; ++i) product = product * f.poly;
  }
  return {std::move(product), std::move(factors)};
}

CBound c_upper(std::uint32_t n, std::uint32_t h) {
  require(n >= 2, "c_upper: n must be at least 2");
  require(h >= 1, "c_upper: h must be at least 1");

  std::optional<CBound> shifted;
  if (n - 1 >= 2) {
    if (auto pp = is_prime_power(n - 1); pp && h + 1 < pp->q) {
      CBound c{n, h, 0, CRoute::kShifted, *pp, std::nullopt};
      const mpz_class units = mu_closed_form(pp->q, pp->q, h + 1).value;
      // F_q^* is a subgroup of the unit group, so this division is exact.
      require(mpz_divisible_ui_p(units.get_mpz_t(), pp->q - 1) != 0,
              "unit count not divisible by q - 1");
      c.value = units / (pp->q - 1);
      shifted = std::move(c);
    }
  }

  PrimePower pp = smallest_prime_power_geq(n);
  while (h >= pp.q || (pp.q == n && h == 1)) {
    require(pp.q < 0xffffffffu, "c_upper: no usable prime power");
    pp = smallest_prime_power_geq(std::uint64_t{pp.q} + 1);
  }
  CBound direct{n, h, mu_closed_form(pp.q, n, h).value, CRoute::kDirect, pp, std::nullopt};

  if (!shifted) return direct;
  if (direct.value < shifted->value) {
    direct.other_route_value = shifted->value;
    return direct;
  }
  shifted->other_route_value = direct.value;
  return *shifted;
}

}  // namespace bhcodes
