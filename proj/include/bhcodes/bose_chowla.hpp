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
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bhcodes/algebra.hpp"

namespace bhcodes {

/// F_q[X]/P(X), deg P >= 1.
class QuotientRing {
 public:
  explicit QuotientRing(Polynomial modulus);

  const Polynomial& modulus() const noexcept { return modulus_; }
  const Field& field() const noexcept { return modulus_.field(); }
  int degree() const noexcept { return modulus_.degree(); }

  Polynomial reduce(const Polynomial& a) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  bool is_unit(const Polynomial& a) const;

 private:
  Polynomial modulus_;
};

enum class GroupMode {
  kFullUnitGroup,  // (F_q[X]/P)^*
  kModScalars,     // (F_q[X]/P)^* / F_q^*
};

/// A group element by canonical representative: reduced mod P and, modulo
/// scalars, scaled so its leading coefficient is 1.
class GroupElement {
 public:
  explicit GroupElement(Polynomial rep) : rep_(std::move(rep)) {}

  const Polynomial& rep() const noexcept { return rep_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Polynomial rep_;
};

/// The unit group of a quotient ring, written multiplicatively.
class UnitGroup {
 public:
  /// `ring_units` is #(F_q[X]/P)^*; the group order divides it by q - 1 in
  /// kModScalars mode.
  UnitGroup(QuotientRing ring, GroupMode mode, mpz_class ring_units);

  const QuotientRing& ring() const noexcept { return ring_; }
  GroupMode mode() const noexcept { return mode_; }
  const mpz_class& order() const noexcept { return order_; }

  GroupElement identity() const;
  /// Throws if `a` is not a unit.
  GroupElement make(const Polynomial& a) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  /// Coefficient tuple of length deg P, constant term first. Equal keys iff
  /// equal elements.
  std::vector<std::uint32_t> key(const GroupElement& a) const;

 private:
  Polynomial canonical(Polynomial a) const;

  QuotientRing ring_;
  GroupMode mode_;
  mpz_class order_;
};

/// X - a_1, ..., X - a_n (full unit group, deg P = h), or
/// 1, X - a_1, ..., X - a_n (modulo scalars, deg P = h + 1).
struct BhSequence {
  UnitGroup group;
  int h = 1;
  std::vector<FieldElement> points;
  std::vector<GroupElement> elements;

  GroupMode mode() const noexcept { return group.mode(); }
  std::size_t length() const noexcept { return elements.size(); }
  const mpz_class& group_order() const noexcept { return group.order(); }
};

/// Linear-modulus construction over GF(q) with the first n field elements as
/// points and P a degree-h polynomial minimizing the unit count.
BhSequence build_sequence_a(const Field& field, int h, std::size_t n);

/// Projective construction: degree-(h+1) modulus, length n_points + 1.
BhSequence build_sequence_b(const Field& field, int h, std::size_t n_points);

/// Length-n sequence with the smallest group among the direct construction
/// at the least usable q >= n and the scalar-quotient construction over
/// n - 1 points at the least usable q >= n - 1.
BhSequence choose_sequence(std::size_t n, int h);

/// Product of the elements on the support of `bits` (one 0/1 entry per
/// sequence element).
GroupElement phi(std::span<const std::uint8_t> bits, const BhSequence& seq);
/// Same, with bit i of `mask` selecting element i.
GroupElement phi(std::uint64_t mask, const BhSequence& seq);

struct BhVerification {
  bool ok = true;
  std::uint64_t multisets = 0;
  /// Two distinct index multisets (0-based, nondecreasing) with equal
  /// products.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      counterexample;
};

/// Exhaustive check that all h-fold products with nondecreasing indices are
/// distinct. Throws BudgetExceeded when C(n+h-1, h) exceeds the budget.
BhVerification verify_bh(const BhSequence& seq, std::uint64_t budget = 0);

std::string describe(const GroupElement& e);

}  // namespace bhcodes
