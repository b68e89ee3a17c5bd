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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bhcodes {

/// A prime power q = p^m.
struct PrimePower {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint32_t q = 2;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

/// Returns (p, m) with p^m == n, or nothing when n is not a prime power.
/// Rejects n < 2.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

/// Least prime power >= n (n >= 2).
PrimePower smallest_prime_power_geq(std::uint64_t n);

// Largest field order handled by the dense log/antilog tables.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Element of GF(q) in index form: the base-p digits of `value` are the
/// coefficients (constant term first) over the defining polynomial.
struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^m). Cheap to copy; all instances of the same order share tables.
///
/// The extension is built over the first monic irreducible of degree m in
/// enumeration order (see monic_from_index), so the representation is
/// deterministic. Elements enumerate in index order 0, 1, ..., q-1, which is
/// lexicographic on the digit vector with the highest digit most significant.
class Field {
 public:
  /// GF(q); q must be a prime power not exceeding kMaxFieldOrder.
  static Field of_order(std::uint32_t q);

  const PrimePower& order() const noexcept;
  std::uint32_t size() const noexcept { return order().q; }
  std::uint32_t characteristic() const noexcept { return order().p; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(std::uint32_t index) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;

  /// All q elements in canonical order.
  std::vector<FieldElement> elements() const;

  /// Base-p digits (constant term first) of the element's representation.
  std::vector<std::uint32_t> digits(FieldElement a) const;

  /// Coefficients over GF(p), constant term first, of the defining
  /// polynomial. Empty for prime fields.
  const std::vector<std::uint32_t>& defining_polynomial() const noexcept;

  std::string to_string(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.size() == b.size();
  }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Polynomial over GF(q), coefficients lowest degree first, no trailing zero.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const Field& field, FieldElement c);
  /// X - a
  static Polynomial linear(const Field& field, FieldElement root);
  static Polynomial x(const Field& field);

  const Field& field() const noexcept { return field_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0].value == 1;
  }
  bool is_monic() const noexcept {
    return !coeffs_.empty() && coeffs_.back().value == 1;
  }
  FieldElement coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : FieldElement{};
  }
  FieldElement leading() const noexcept {
    return coeffs_.empty() ? FieldElement{} : coeffs_.back();
  }

  Polynomial scaled(FieldElement c) const;
  Polynomial monic() const;

  /// Enumeration index among monic polynomials of the same degree: the lower
  /// coefficients read as base-q digits, constant term least significant.
  std::uint64_t monic_index() const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Degree first, then monic_index-style comparison of the coefficients from
  /// the top down. Matches enumeration order for monic polynomials.
  friend bool operator<(const Polynomial& a, const Polynomial& b) noexcept;

 private:
  void trim();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Throws on division by the zero polynomial.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// u with u*a == gcd(a, m) (mod m), assuming gcd(a, m) == 1. Throws
/// otherwise.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

Polynomial mul_mod(const Polynomial& a, const Polynomial& b,
                   const Polynomial& m);
Polynomial pow_mod(const Polynomial& base, const mpz_class& exponent,
                   const Polynomial& m);

/// Horner evaluation.
FieldElement poly_eval(const Polynomial& p, FieldElement a);

/// The monic polynomial of degree d whose lower coefficients are the base-q
/// digits of index (constant term least significant).
Polynomial monic_from_index(const Field& field, int degree,
                            std::uint64_t index);

/// Ben-Or test: no common factor with X^(q^i) - X for i <= deg/2.
bool is_irreducible(const Polynomial& p);

/// Number of monic irreducibles of degree d over GF(q) (necklace formula).
mpz_class count_irreducibles(std::uint32_t q, int degree);

/// First monic irreducible of degree d in enumeration order.
Polynomial find_irreducible(const Field& field, int degree);

/// Streams monic irreducibles of a fixed degree in enumeration order,
/// skipping those in `avoid`. next() returns nothing once every irreducible
/// of that degree has been seen.
class IrreducibleEnumerator {
 public:
  IrreducibleEnumerator(Field field, int degree,
                        std::vector<Polynomial> avoid = {});

  std::optional<Polynomial> next();

 private:
  Field field_;
  int degree_;
  std::vector<Polynomial> avoid_;
  std::uint64_t next_index_ = 0;
  std::uint64_t space_ = 0;
  mpz_class total_;
  mpz_class seen_ = 0;
};

}  // namespace bhcodes
