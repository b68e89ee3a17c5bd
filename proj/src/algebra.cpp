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

#include "bhcodes/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "bhcodes/error.hpp"

namespace bhcodes {

std::uint64_t default_budget() {
  static const std::uint64_t value = [] {
    if (const char* env = std::getenv("BH_BUDGET"); env != nullptr) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{10'000'000};
  }();
  return value;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  require(n >= 2, "is_prime_power: n must be at least 2");
  require(n <= std::numeric_limits<std::uint32_t>::max(),
          "is_prime_power: n out of range");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    return PrimePower{static_cast<std::uint32_t>(n), 1,
                      static_cast<std::uint32_t>(n)};
  }
  std::uint64_t rest = n;
  std::uint32_t m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), m,
                    static_cast<std::uint32_t>(n)};
}

PrimePower smallest_prime_power_geq(std::uint64_t n) {
  require(n >= 2, "smallest_prime_power_geq: n must be at least 2");
  for (std::uint64_t k = n;; ++k) {
    if (auto pp = is_prime_power(k)) return *pp;
  }
}

// ---------------------------------------------------------------------------
// Field

struct Field::Impl {
  PrimePower pp;
  std::vector<std::uint32_t> defining;  // over GF(p), constant first, monic
  std::vector<std::uint32_t> pow_p;     // p^i, i <= m
  std::vector<std::uint32_t> log;       // log[0] unused
  std::vector<std::uint32_t> exp;       // length 2(q-1)

  std::uint32_t digit(std::uint32_t a, std::uint32_t i) const {
    return (a / pow_p[i]) % pp.p;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (pp.m == 1) return (a + b) % pp.p;
    if (pp.p == 2) return a ^ b;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < pp.m; ++i) {
      r += ((digit(a, i) + digit(b, i)) % pp.p) * pow_p[i];
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (pp.p == 2) return a;
    if (pp.m == 1) return (pp.p - a) % pp.p;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < pp.m; ++i) {
      r += ((pp.p - digit(a, i)) % pp.p) * pow_p[i];
    }
    return r;
  }

  // Schoolbook product of digit vectors reduced by the defining polynomial.
  // Only used while building the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t m = pp.m;
    const std::uint64_t p = pp.p;
    if (m == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = 0; j < m; ++j) {
        prod[i + j] = (prod[i + j] + digit(a, i) * std::uint64_t{digit(b, j)}) % p;
      }
    }
    for (std::uint32_t k = 2 * m - 2; k >= m; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < m; ++i) {
        prod[k - m + i] = (prod[k - m + i] + (p - c) * defining[i]) % p;
      }
    }
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += static_cast<std::uint32_t>(prod[i]) * pow_p[i];
    }
    return r;
  }

  void build_tables() {
    const std::uint32_t q = pp.q;
    const std::uint32_t order = q - 1;
    log.assign(q, 0);
    exp.assign(2 * std::size_t{order}, 0);
    for (std::uint32_t g = 1; g < q; ++g) {
      std::uint32_t x = 1;
      bool primitive = true;
      for (std::uint32_t k = 0; k < order; ++k) {
        exp[k] = x;
        x = slow_mul(x, g);
        if (x == 1 && k + 1 < order) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
    for (std::uint32_t k = 0; k < order; ++k) {
      exp[k + order] = exp[k];
      log[exp[k]] = k;
    }
  }
};

namespace {

std::shared_ptr<const Field::Impl> build_field(const PrimePower& pp,
                                               std::vector<std::uint32_t> defining) {
  auto impl = std::make_shared<Field::Impl>();
  impl->pp = pp;
  impl->defining = std::move(defining);
  impl->pow_p.resize(pp.m + 1);
  impl->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= pp.m; ++i) impl->pow_p[i] = impl->pow_p[i - 1] * pp.p;
  impl->build_tables();
  return impl;
}

}  // namespace

Field Field::of_order(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const Impl>> cache;

  require(q >= 2 && q <= kMaxFieldOrder,
          "field order " + std::to_string(q) + " out of range [2, 65536]");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(q); it != cache.end()) return Field(it->second);
  }
  auto pp = is_prime_power(q);
  require(pp.has_value(), "field order " + std::to_string(q) + " is not a prime power");

  std::vector<std::uint32_t> defining;
  if (pp->m > 1) {
    Field base = of_order(pp->p);
    Polynomial f = find_irreducible(base, static_cast<int>(pp->m));
    for (FieldElement c : f.coeffs()) defining.push_back(c.value);
  }
  auto impl = build_field(*pp, std::move(defining));

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(q, impl);
  return Field(it->second);
}

const PrimePower& Field::order() const noexcept { return impl_->pp; }

FieldElement Field::element(std::uint32_t index) const {
  require(index < size(), "field element index out of range");
  return {index};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  return {impl_->add(a.value, b.value)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  return {impl_->add(a.value, impl_->neg(b.value))};
}

FieldElement Field::neg(FieldElement a) const { return {impl_->neg(a.value)}; }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.value == 0 || b.value == 0) return {0};
  return {impl_->exp[impl_->log[a.value] + impl_->log[b.value]]};
}

FieldElement Field::inv(FieldElement a) const {
  require(a.value != 0, "inverse of zero in GF(" + std::to_string(size()) + ")");
  const std::uint32_t order = size() - 1;
  return {impl_->exp[(order - impl_->log[a.value]) % order]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(size());
  for (std::uint32_t i = 0; i < size(); ++i) out[i] = {i};
  return out;
}

std::vector<std::uint32_t> Field::digits(FieldElement a) const {
  std::vector<std::uint32_t> out(impl_->pp.m);
  for (std::uint32_t i = 0; i < impl_->pp.m; ++i) out[i] = impl_->digit(a.value, i);
  return out;
}

const std::vector<std::uint32_t>& Field::defining_polynomial() const noexcept {
  return impl_->defining;
}

std::string Field::to_string(FieldElement a) const {
  if (impl_->pp.m == 1 || a.value == 0) return std::to_string(a.value);
  std::string out;
  const auto d = digits(a);
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += 't';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (FieldElement c : coeffs_) require(c.value < field_.size(), "coefficient outside field");
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Field& field, FieldElement c) {
  return Polynomial(field, {c});
}

Polynomial Polynomial::linear(const Field& field, FieldElement root) {
  return Polynomial(field, {field.neg(root), field.one()});
}

Polynomial Polynomial::x(const Field& field) {
  return Polynomial(field, {field.zero(), field.one()});
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial out(field_);
  out.coeffs_.reserve(coeffs_.size());
  for (FieldElement a : coeffs_) out.coeffs_.push_back(field_.mul(a, c));
  out.trim();
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_.inv(leading()));
}

std::uint64_t Polynomial::monic_index() const {
  std::uint64_t index = 0;
  for (int i = degree() - 1; i >= 0; --i) index = index * field_.size() + coeffs_[i].value;
  return index;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const bool prime = field_.order().m == 1;
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement c = coeffs_[i];
    if (c.value == 0) continue;
    if (!out.empty()) out += '+';
    std::string cs = field_.to_string(c);
    if (!prime && cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c.value != 1) out += cs;
    out += 'X';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  require(a.field() == b.field(), "polynomials over different fields");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  std::vector<FieldElement> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].value == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Polynomial(f, std::move(c));
}

bool operator<(const Polynomial& a, const Polynomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  require(!b.is_zero(), "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> quo(a.degree() - b.degree() + 1);
  const FieldElement lead_inv = f.inv(b.leading());
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const FieldElement c = f.mul(rem[k], lead_inv);
    quo[k - db] = c;
    if (c.value == 0) continue;
    for (int i = 0; i <= db; ++i) {
      rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b.coeffs()[i]));
    }
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  const Field& f = m.field();
  Polynomial r0 = m;
  Polynomial r1 = divmod(a, m).remainder;
  Polynomial s0(f);
  Polynomial s1 = Polynomial::constant(f, f.one());
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(r0.degree() == 0, "inverse_mod: element is not a unit");
  return divmod(s0.scaled(f.inv(r0.leading())), m).remainder;
}

Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
  return divmod(a * b, m).remainder;
}

Polynomial pow_mod(const Polynomial& base, const mpz_class& exponent, const Polynomial& m) {
  require(exponent >= 0, "pow_mod: negative exponent");
  const Field& f = m.field();
  Polynomial result = divmod(Polynomial::constant(f, f.one()), m).remainder;
  Polynomial b = divmod(base, m).remainder;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(result, result, m);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mul_mod(result, b, m);
  }
  return result;
}

FieldElement poly_eval(const Polynomial& p, FieldElement a) {
  const Field& f = p.field();
  FieldElement acc{0};
  for (int i = p.degree(); i >= 0; --i) acc = f.add(f.mul(acc, a), p.coeffs()[i]);
  return acc;
}

Polynomial monic_from_index(const Field& field, int degree, std::uint64_t index) {
  require(degree >= 0, "monic_from_index: negative degree");
  std::vector<FieldElement> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    c[i] = {static_cast<std::uint32_t>(index % field.size())};
    index /= field.size();
  }
  c[degree] = field.one();
  return Polynomial(field, std::move(c));
}

bool is_irreducible(const Polynomial& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  const Field& f = p.field();
  const Polynomial x = Polynomial::x(f);
  const mpz_class q = f.size();
  Polynomial power = x;
  for (int i = 1; i <= p.degree() / 2; ++i) {
    power = pow_mod(power, q, p);
    if (gcd(power - x, p).degree() > 0) return false;
  }
  return true;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

mpz_class count_irreducibles(std::uint32_t q, int degree) {
  require(degree >= 1, "count_irreducibles: degree must be positive");
  mpz_class sum = 0;
  for (int k = 1; k <= degree; ++k) {
    if (degree % k != 0) continue;
    mpz_class qk;
    mpz_ui_pow_ui(qk.get_mpz_t(), q, static_cast<unsigned long>(k));
    sum += mobius(degree / k) * qk;
  }
  return sum / degree;
}

Polynomial find_irreducible(const Field& field, int degree) {
  IrreducibleEnumerator it(field, degree);
  auto p = it.next();
  // Irreducibles exist in every degree.
  return *p;
}

IrreducibleEnumerator::IrreducibleEnumerator(Field field, int degree,
                                             std::vector<Polynomial> avoid)
    : field_(std::move(field)), degree_(degree), avoid_(std::move(avoid)) {
  require(degree >= 1, "irreducible degree must be at least 1");
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), field_.size(), static_cast<unsigned long>(degree));
  require(space.fits_ulong_p(), "irreducible search space too large");
  space_ = space.get_ui();
  total_ = count_irreducibles(field_.size(), degree);
}

std::optional<Polynomial> IrreducibleEnumerator::next() {
  while (seen_ < total_ && next_index_ < space_) {
    Polynomial p = monic_from_index(field_, degree_, next_index_++);
    if (!is_irreducible(p)) continue;
    ++seen_;
    if (std::find(avoid_.begin(), avoid_.end(), p) == avoid_.end()) return p;
  }
  return std::nullopt;
}

}  // namespace bhcodes
