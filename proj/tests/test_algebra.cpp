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

#include <set>

#include "bhcodes/algebra.hpp"
#include "bhcodes/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bhcodes;

namespace {

Polynomial poly(const Field& f, std::initializer_list<std::uint32_t> low_first) {
  std::vector<FieldElement> c;
  for (auto v : low_first) c.push_back(f.element(v));
  return Polynomial(f, c);
}

// Irreducible iff no monic divisor of degree 1..deg/2 divides it.
bool irreducible_by_trial_division(const Polynomial& p) {
  const Field& f = p.field();
  if (p.degree() < 1) return false;
  for (int d = 1; d <= p.degree() / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f.size();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (divmod(p, monic_from_index(f, d, idx)).remainder.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime power recognition") {
  CHECK_FALSE(is_prime_power(279).has_value());
  CHECK(*is_prime_power(4) == PrimePower{2, 2, 4});
  CHECK(*is_prime_power(281) == PrimePower{281, 1, 281});
  CHECK(*is_prime_power(65536) == PrimePower{2, 16, 65536});
  CHECK_THROWS_AS(is_prime_power(1), Error);
  CHECK_FALSE(is_prime_power(12).has_value());

  CHECK(smallest_prime_power_geq(280).q == 281);
  CHECK(smallest_prime_power_geq(5).q == 5);
  CHECK(smallest_prime_power_geq(126).q == 127);
}

TEST_CASE("smallest_prime_power_geq leaves no gap") {
  // Sieve oracle for prime powers up to 10^4.
  constexpr std::uint32_t kLimit = 10100;
  std::vector<bool> composite(kLimit + 1, false);
  std::vector<bool> prime_power(kLimit + 1, false);
  for (std::uint32_t p = 2; p <= kLimit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = std::uint64_t{p} * p; m <= kLimit; m += p) composite[m] = true;
    for (std::uint64_t pk = p; pk <= kLimit; pk *= p) prime_power[pk] = true;
  }
  for (std::uint32_t n = 2; n <= 10000; ++n) {
    CHECK(is_prime_power(n).has_value() == prime_power[n]);
    const std::uint32_t q = smallest_prime_power_geq(n).q;
    REQUIRE(q >= n);
    REQUIRE(prime_power[q]);
    for (std::uint32_t k = n; k < q; ++k) REQUIRE_FALSE(prime_power[k]);
  }
}

TEST_CASE("field arithmetic examples") {
  const Field f3 = Field::of_order(3);
  CHECK(f3.add(f3.element(2), f3.element(2)) == f3.element(1));

  const Field f4 = Field::of_order(4);
  CHECK(f4.defining_polynomial() == std::vector<std::uint32_t>{1, 1, 1});
  const FieldElement t = f4.element(2);
  CHECK(f4.mul(t, t) == f4.element(3));
  CHECK(f4.to_string(f4.element(3)) == "t+1");

  CHECK(f4.elements().size() == 4);
  CHECK(f3.to_string(f3.element(2)) == "2");
  CHECK_THROWS_AS(f3.inv(f3.zero()), Error);
  CHECK_THROWS_AS(Field::of_order(6), Error);
  CHECK_THROWS_AS(Field::of_order(1u << 17), Error);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    const auto els = f.elements();
    REQUIRE(els.size() == q);
    REQUIRE(std::set<FieldElement>(els.begin(), els.end()).size() == q);
    for (auto a : els) {
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (auto b : els) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        if (b != f.zero()) CHECK(f.mul(f.div(a, b), b) == a);
        for (auto c : els) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("extension fields use the first monic irreducible") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 49u, 121u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    const PrimePower pp = f.order();
    const Field base = Field::of_order(pp.p);
    std::vector<FieldElement> coeffs;
    for (auto c : f.defining_polynomial()) coeffs.push_back(base.element(c));
    const Polynomial defining(base, coeffs);
    CHECK(defining.degree() == static_cast<int>(pp.m));
    CHECK(irreducible_by_trial_division(defining));
    CHECK(defining == find_irreducible(base, static_cast<int>(pp.m)));
  }
}

TEST_CASE("polynomial evaluation and formatting") {
  const Field f3 = Field::of_order(3);
  const Polynomial p = poly(f3, {1, 0, 1});
  CHECK(poly_eval(p, f3.element(0)) == f3.element(1));
  CHECK(poly_eval(p, f3.element(1)) == f3.element(2));
  CHECK(poly_eval(Polynomial(f3), f3.element(2)) == f3.zero());
  CHECK(p.to_string() == "X^2+1");
  CHECK(Polynomial::linear(f3, f3.element(1)).to_string() == "X+2");
  CHECK(Polynomial(f3).degree() == Polynomial::kZeroDegree);
}

TEST_CASE("find_irreducible examples") {
  const Field f2 = Field::of_order(2);
  const Field f3 = Field::of_order(3);
  CHECK(find_irreducible(f2, 1).to_string() == "X");
  CHECK(find_irreducible(f3, 2).to_string() == "X^2+1");
  CHECK(find_irreducible(f2, 3).to_string() == "X^3+X+1");
}

TEST_CASE("irreducible enumeration") {
  const Field f2 = Field::of_order(2);
  const Field f3 = Field::of_order(3);

  IrreducibleEnumerator e3(f3, 2);
  CHECK(e3.next()->to_string() == "X^2+1");

  IrreducibleEnumerator only(f2, 2, {poly(f2, {1, 1, 1})});
  CHECK_FALSE(only.next().has_value());

  IrreducibleEnumerator lin(f2, 1);
  CHECK(lin.next()->to_string() == "X");
  CHECK(lin.next()->to_string() == "X+1");
  CHECK_FALSE(lin.next().has_value());
}

TEST_CASE("irreducibility test agrees with trial division") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    for (int d = 1; d <= 4; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= q;
      if (count > 3000) break;
      std::uint64_t found = 0;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Polynomial p = monic_from_index(f, d, idx);
        CHECK(p.monic_index() == idx);
        const bool fast = is_irreducible(p);
        REQUIRE(fast == irreducible_by_trial_division(p));
        if (fast) ++found;
      }
      CAPTURE(q);
      CAPTURE(d);
      CHECK(mpz_class(found) == count_irreducibles(q, d));
    }
  }
}

TEST_CASE("find_irreducible has no roots for small degrees") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 281u}) {
    const Field f = Field::of_order(q);
    for (int d : {2, 3}) {
      const Polynomial p = find_irreducible(f, d);
      CHECK(p.degree() == d);
      CHECK(p.is_monic());
      if (q <= 16) CHECK(irreducible_by_trial_division(p));
      for (auto a : f.elements()) CHECK(poly_eval(p, a) != f.zero());
    }
  }
}

TEST_CASE("polynomial ring identities") {
  const Field f = Field::of_order(5);
  test::Rng rng(7);
  auto random_poly = [&](int deg) {
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i) c.push_back(f.element(rng.below(5)));
    return Polynomial(f, c);
  };
  for (int iter = 0; iter < 200; ++iter) {
    const Polynomial a = random_poly(static_cast<int>(rng.below(6)));
    Polynomial b = random_poly(static_cast<int>(rng.below(4)));
    if (b.is_zero()) b = Polynomial::x(f);
    const DivMod qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.degree() < b.degree());

    const Polynomial g = gcd(a, b);
    if (!g.is_zero()) {
      CHECK(divmod(a, g).remainder.is_zero());
      CHECK(divmod(b, g).remainder.is_zero());
    }
    const Polynomial m = monic_from_index(f, 3, 1);  // X^3+1
    if (!a.is_zero() && gcd(a, m).is_one()) {
      CHECK(mul_mod(a, inverse_mod(a, m), m).is_one());
    }
    CHECK(pow_mod(a, mpz_class(3), m) == mul_mod(a, mul_mod(a, a, m), m));
  }
}
