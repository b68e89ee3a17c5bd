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

#include "bhcodes/bose_chowla.hpp"

#include <unordered_map>

#include "bhcodes/error.hpp"
#include "bhcodes/mu_bounds.hpp"
#include "key_hash.hpp"

namespace bhcodes {

QuotientRing::QuotientRing(Polynomial modulus) : modulus_(std::move(modulus)) {
  require(modulus_.degree() >= 1, "quotient ring modulus must have degree >= 1");
}

Polynomial QuotientRing::reduce(const Polynomial& a) const {
  require(a.field() == field(), "element from a different field");
  if (a.degree() < degree()) return a;
  return divmod(a, modulus_).remainder;
}

Polynomial QuotientRing::mul(const Polynomial& a, const Polynomial& b) const {
  return reduce(a * b);
}

bool QuotientRing::is_unit(const Polynomial& a) const {
  return gcd(reduce(a), modulus_).is_one();
}

// ---------------------------------------------------------------------------

UnitGroup::UnitGroup(QuotientRing ring, GroupMode mode, mpz_class ring_units)
    : ring_(std::move(ring)), mode_(mode), order_(std::move(ring_units)) {
  if (mode_ == GroupMode::kModScalars) {
    const std::uint32_t scalars = ring_.field().size() - 1;
    require(mpz_divisible_ui_p(order_.get_mpz_t(), scalars) != 0,
            "unit count is not divisible by q - 1");
    order_ /= scalars;
  }
}

Polynomial UnitGroup::canonical(Polynomial a) const {
  if (mode_ == GroupMode::kModScalars) return a.monic();
  return a;
}

GroupElement UnitGroup::identity() const {
  const Field& f = ring_.field();
  return GroupElement(Polynomial::constant(f, f.one()));
}

GroupElement UnitGroup::make(const Polynomial& a) const {
  Polynomial r = ring_.reduce(a);
  require(gcd(r, ring_.modulus()).is_one(),
          a.to_string() + " is not a unit modulo " + ring_.modulus().to_string());
  return GroupElement(canonical(std::move(r)));
}

GroupElement UnitGroup::mul(const GroupElement& a, const GroupElement& b) const {
  return GroupElement(canonical(ring_.mul(a.rep(), b.rep())));
}

GroupElement UnitGroup::inverse(const GroupElement& a) const {
  return GroupElement(canonical(inverse_mod(a.rep(), ring_.modulus())));
}

std::vector<std::uint32_t> UnitGroup::key(const GroupElement& a) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(ring_.degree()), 0);
  const auto& c = a.rep().coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].value;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FieldElement> first_points(const Field& field, std::size_t n) {
  std::vector<FieldElement> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = field.element(static_cast<std::uint32_t>(i));
  return points;
}

}  // namespace

BhSequence build_sequence_a(const Field& field, int h, std::size_t n) {
  require(n >= 1, "sequence length must be at least 1");
  require(n <= field.size(), "sequence length " + std::to_string(n) + " exceeds q = " +
                                 std::to_string(field.size()));
  require(h >= 1 && static_cast<std::uint32_t>(h) < field.size(), "need 1 <= h < q");

  auto points = first_points(field, n);
  // Every linear modulus vanishes somewhere on F_q when n = q; a degree-2
  // irreducible still keeps the X - a_i distinct units.
  FactoredPolynomial modulus = [&] {
    if (h == 1 && n == field.size()) {
      Polynomial quad = find_irreducible(field, 2);
      return FactoredPolynomial{quad, {Factor{quad, 1}}};
    }
    return construct_optimal_poly(field, points, h);
  }();
  mpz_class units = mu_of_factors(field.size(), modulus.factors);
  UnitGroup group(QuotientRing(std::move(modulus.product)), GroupMode::kFullUnitGroup,
                  std::move(units));

  BhSequence seq{std::move(group), h, std::move(points), {}};
  seq.elements.reserve(n);
  for (FieldElement a : seq.points) seq.elements.push_back(seq.group.make(Polynomial::linear(field, a)));
  return seq;
}

BhSequence build_sequence_b(const Field& field, int h, std::size_t n_points) {
  require(n_points >= 1, "need at least one point");
  require(n_points <= field.size(), "point count " + std::to_string(n_points) +
                                        " exceeds q = " + std::to_string(field.size()));
  require(h >= 1 && static_cast<std::uint32_t>(h) + 1 < field.size(), "need 1 <= h and h + 1 < q");

  auto points = first_points(field, n_points);
  FactoredPolynomial modulus = construct_optimal_poly(field, points, h + 1);
  mpz_class units = mu_of_factors(field.size(), modulus.factors);
  UnitGroup group(QuotientRing(std::move(modulus.product)), GroupMode::kModScalars,
                  std::move(units));

  BhSequence seq{std::move(group), h, std::move(points), {}};
  seq.elements.reserve(n_points + 1);
  seq.elements.push_back(seq.group.identity());
  for (FieldElement a : seq.points) seq.elements.push_back(seq.group.make(Polynomial::linear(field, a)));
  return seq;
}

BhSequence choose_sequence(std::size_t n, int h) {
  require(n >= 1, "sequence length must be at least 1");
  require(h >= 1, "h must be at least 1");
  const auto hu = static_cast<std::uint32_t>(h);

  auto first_usable = [](std::uint64_t from, auto usable) -> std::optional<PrimePower> {
    PrimePower pp = smallest_prime_power_geq(std::max<std::uint64_t>(from, 2));
    while (!usable(pp.q)) {
      if (pp.q >= kMaxFieldOrder) return std::nullopt;
      pp = smallest_prime_power_geq(std::uint64_t{pp.q} + 1);
    }
    if (pp.q > kMaxFieldOrder) return std::nullopt;
    return pp;
  };

  auto direct_q = first_usable(n, [&](std::uint32_t q) { return hu < q && !(q == n && hu == 1); });
  std::optional<PrimePower> shifted_q;
  if (n >= 2) shifted_q = first_usable(n - 1, [&](std::uint32_t q) { return hu + 1 < q; });

  std::optional<mpz_class> direct_order;
  std::optional<mpz_class> shifted_order;
  if (direct_q) {
    direct_order = mu_closed_form(direct_q->q, static_cast<std::uint32_t>(n), hu).value;
  }
  if (shifted_q) {
    shifted_order = mu_closed_form(shifted_q->q, static_cast<std::uint32_t>(n - 1), hu + 1).value /
                    (shifted_q->q - 1);
  }
  if (!direct_order && !shifted_order) {
    throw Error(ErrorCode::kUnsupported, "no field of order <= 65536 supports n = " +
                                             std::to_string(n) + ", h = " + std::to_string(h));
  }
  if (shifted_order && (!direct_order || *shifted_order < *direct_order)) {
    return build_sequence_b(Field::of_order(shifted_q->q), h, n - 1);
  }
  return build_sequence_a(Field::of_order(direct_q->q), h, n);
}

GroupElement phi(std::span<const std::uint8_t> bits, const BhSequence& seq) {
  require(bits.size() == seq.length(), "word length " + std::to_string(bits.size()) +
                                           " does not match sequence length " +
                                           std::to_string(seq.length()));
  GroupElement acc = seq.group.identity();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    require(bits[i] <= 1, "word entries must be 0 or 1");
    if (bits[i] != 0) acc = seq.group.mul(acc, seq.elements[i]);
  }
  return acc;
}

GroupElement phi(std::uint64_t mask, const BhSequence& seq) {
  require(seq.length() >= 64 || (mask >> seq.length()) == 0,
          "word has bits beyond the sequence length");
  GroupElement acc = seq.group.identity();
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) acc = seq.group.mul(acc, seq.elements[i]);
  }
  return acc;
}

BhVerification verify_bh(const BhSequence& seq, std::uint64_t budget) {
  budget = resolve_budget(budget);
  const std::size_t n = seq.length();
  const auto h = static_cast<std::size_t>(seq.h);
  require(seq.h >= 1, "h must be at least 1");

  mpz_class multisets;
  if (n == 0) {
    multisets = 0;
  } else {
    mpz_bin_uiui(multisets.get_mpz_t(), n + h - 1, h);
  }
  if (multisets > budget) {
    throw BudgetExceeded("verify_bh", multisets.fits_ulong_p() ? multisets.get_ui() : ~0ull,
                         budget);
  }

  BhVerification result;
  if (n == 0) return result;

  std::unordered_map<std::vector<std::uint32_t>, std::vector<std::size_t>, detail::KeyHash> seen;
  seen.reserve(multisets.get_ui());

  std::vector<std::size_t> indices(h, 0);
  std::vector<GroupElement> prefix(h + 1, seq.group.identity());

  // Depth-first over nondecreasing index tuples, carrying prefix products.
  auto visit = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == h) {
      ++result.multisets;
      auto key = seq.group.key(prefix[h]);
      auto [it, inserted] = seen.try_emplace(std::move(key), indices);
      if (!inserted) {
        result.ok = false;
        result.counterexample.emplace(it->second, indices);
        return false;
      }
      return true;
    }
    for (std::size_t i = start; i < n; ++i) {
      indices[depth] = i;
      prefix[depth + 1] = seq.group.mul(prefix[depth], seq.elements[i]);
      if (!self(self, depth + 1, i)) return false;
    }
    return true;
  };
  visit(visit, 0, 0);
  return result;
}

std::string describe(const GroupElement& e) { return e.rep().to_string(); }

}  // namespace bhcodes
