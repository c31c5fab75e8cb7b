/**************************************************************************
 * chain_ring.cpp
 *
 * Copyright 2026 The lcpcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "lcp/chain_ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (k > 0) {
    if (k & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    k >>= 1;
  }
  return result;
}

// Dense polynomial arithmetic over F_p for the irreducibility test.
// Polynomials are trimmed: no trailing zero coefficients; zero is {}.
namespace fp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly rem(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return rem(std::move(prod), f, p);
}

Poly powmod(Poly base, std::uint64_t k, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = rem(std::move(base), f, p);
  while (k > 0) {
    if (k & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace fp

}  // namespace

std::string format_poly(const Poly& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const std::uint64_t c = coeffs[k];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (k == 0 || c != 1) out << c;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const Poly& f, std::uint64_t p) {
  Poly g;
  g.reserve(f.size());
  for (std::uint64_t c : f) g.push_back(c % p);
  fp::trim(g);
  if (g.size() < 2) return false;
  const std::size_t degree = g.size() - 1;
  if (degree == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    h = fp::powmod(h, p, g, p);
    Poly d = fp::gcd(g, fp::sub(h, x, p), p);
    if (d.size() > 1) return false;
  }
  return true;
}

Poly default_modulus(std::uint64_t p, unsigned e, unsigned r) {
  if (r < 1 || r > ChainRingSpec::kMaxDegree) {
    throw InvalidRingError("residue degree r=" + std::to_string(r) + " outside supported range [1, " +
                           std::to_string(ChainRingSpec::kMaxDegree) + "]");
  }
  if (!is_prime(p)) throw InvalidRingError(std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidRingError("nilpotency index must be at least 1");
  Poly f(r + 1, 0);
  f[r] = 1;
  // Odometer with f[0] as the least significant digit.
  while (true) {
    if (is_irreducible_mod_p(f, p)) return f;
    std::size_t i = 0;
    while (i < r && ++f[i] == p) f[i++] = 0;
    if (i == r) break;
  }
  throw InvalidRingError("no irreducible polynomial found");  // unreachable for prime p
}

ChainRingSpec::ChainRingSpec(std::uint64_t p, unsigned e, unsigned r)
    : ChainRingSpec(p, e, r, default_modulus(p, e, r)) {}

ChainRingSpec::ChainRingSpec(std::uint64_t p, unsigned e, unsigned r, Poly modulus)
    : p_(p), e_(e), r_(r), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InvalidRingError(std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidRingError("nilpotency index must be at least 1");
  if (r < 1 || r > kMaxDegree) {
    throw InvalidRingError("residue degree r=" + std::to_string(r) + " outside supported range [1, " +
                           std::to_string(kMaxDegree) + "]");
  }
  for (unsigned i = 0; i < e * r; ++i) {
    if (size_ > kMaxRingSize / p) throw InvalidRingError("ring size p^(e*r) exceeds 2^62");
    size_ *= p;
    if (i < e) pe_ *= p;
    if (i < r) q_ *= p;
  }
  if (modulus_.size() != r + 1 || modulus_.back() != 1) {
    throw InvalidRingError("modulus must be monic of degree " + std::to_string(r));
  }
  for (std::uint64_t c : modulus_) {
    if (c >= pe_) throw InvalidRingError("modulus coefficient outside [0, p^e)");
  }
  if (!is_irreducible_mod_p(modulus_, p_)) {
    throw InvalidRingError("modulus is not irreducible modulo " + std::to_string(p_));
  }
}

std::uint64_t ChainRingSpec::mulmod(std::uint64_t x, std::uint64_t y) const { return mul_mod(x, y, pe_); }

ChainRingElement ChainRingSpec::zero() const { return ChainRingElement{std::vector<std::uint64_t>(r_, 0)}; }

ChainRingElement ChainRingSpec::one() const { return from_integer(1); }

ChainRingElement ChainRingSpec::from_integer(std::int64_t k) const {
  ChainRingElement a = zero();
  const auto m = static_cast<std::int64_t>(pe_);
  std::int64_t v = k % m;
  if (v < 0) v += m;
  a.coeffs[0] = static_cast<std::uint64_t>(v);
  return a;
}

ChainRingElement ChainRingSpec::gamma_power(unsigned t) const {
  ChainRingElement a = zero();
  if (t >= e_) return a;
  std::uint64_t v = 1;
  for (unsigned i = 0; i < t; ++i) v *= p_;
  a.coeffs[0] = v;
  return a;
}

void ChainRingSpec::validate(const ChainRingElement& a) const {
  if (a.coeffs.size() != r_) {
    throw MalformedElementError("element has " + std::to_string(a.coeffs.size()) + " coefficients, ring expects " +
                                std::to_string(r_));
  }
  for (std::uint64_t c : a.coeffs) {
    if (c >= pe_) throw MalformedElementError("coefficient " + std::to_string(c) + " outside [0, p^e)");
  }
}

ChainRingElement ChainRingSpec::add(const ChainRingElement& a, const ChainRingElement& b) const {
  validate(a);
  validate(b);
  ChainRingElement c = a;
  for (unsigned i = 0; i < r_; ++i) {
    c.coeffs[i] += b.coeffs[i];
    if (c.coeffs[i] >= pe_) c.coeffs[i] -= pe_;
  }
  return c;
}

ChainRingElement ChainRingSpec::neg(const ChainRingElement& a) const {
  validate(a);
  ChainRingElement c = a;
  for (auto& x : c.coeffs) x = x == 0 ? 0 : pe_ - x;
  return c;
}

ChainRingElement ChainRingSpec::sub(const ChainRingElement& a, const ChainRingElement& b) const {
  return add(a, neg(b));
}

ChainRingElement ChainRingSpec::mul(const ChainRingElement& a, const ChainRingElement& b) const {
  validate(a);
  validate(b);
  if (r_ == 1) return ChainRingElement{{mulmod(a.coeffs[0], b.coeffs[0])}};
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a.coeffs[i], b.coeffs[j])) % pe_;
    }
  }
  // x^r = -(f_0 + ... + f_{r-1} x^{r-1})
  for (std::size_t k = prod.size() - 1; k >= r_; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < r_; ++i) {
      const std::uint64_t t = mulmod(c, modulus_[i]);
      std::uint64_t& slot = prod[k - r_ + i];
      slot = (slot + pe_ - t) % pe_;
    }
  }
  prod.resize(r_);
  return ChainRingElement{std::move(prod)};
}

ChainRingElement ChainRingSpec::pow(ChainRingElement a, std::uint64_t k) const {
  ChainRingElement result = one();
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

bool ChainRingSpec::is_zero(const ChainRingElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

bool ChainRingSpec::is_unit(const ChainRingElement& a) const {
  validate(a);
  return std::any_of(a.coeffs.begin(), a.coeffs.end(), [this](std::uint64_t c) { return c % p_ != 0; });
}

ChainRingElement ChainRingSpec::inverse(const ChainRingElement& a) const {
  if (!is_unit(a)) throw NotInvertibleError(format(a) + " is not a unit");
  // a^(q-2) inverts a modulo gamma; each Newton step b <- b(2 - ab)
  // doubles the gamma-adic precision.
  ChainRingElement b = pow(a, q_ - 2);
  const ChainRingElement two = from_integer(2);
  for (unsigned precision = 1; precision < e_; precision *= 2) {
    b = mul(b, sub(two, mul(a, b)));
  }
  return b;
}

unsigned ChainRingSpec::valuation(const ChainRingElement& a) const {
  validate(a);
  unsigned best = e_;
  for (std::uint64_t c : a.coeffs) {
    if (c == 0) continue;
    unsigned v = 0;
    while (c % p_ == 0) {
      c /= p_;
      ++v;
    }
    best = std::min(best, v);
  }
  return best;
}

ChainRingElement ChainRingSpec::divide_by_gamma(const ChainRingElement& a, unsigned t) const {
  if (valuation(a) < t) throw NotInvertibleError(format(a) + " is not divisible by gamma^" + std::to_string(t));
  std::uint64_t pt = 1;
  for (unsigned i = 0; i < t; ++i) pt *= p_;
  ChainRingElement c = a;
  for (auto& x : c.coeffs) x /= pt;
  return c;
}

ChainRingElement ChainRingSpec::residue_mod_gamma(const ChainRingElement& a, unsigned t) const {
  validate(a);
  std::uint64_t pt = 1;
  for (unsigned i = 0; i < std::min(t, e_); ++i) pt *= p_;
  if (t >= e_) return a;
  ChainRingElement c = a;
  for (auto& x : c.coeffs) x %= pt;
  return c;
}

ChainRingElement ChainRingSpec::element_at(std::uint64_t index) const {
  if (index >= size_) throw MalformedElementError("element index " + std::to_string(index) + " out of range");
  ChainRingElement a = zero();
  for (unsigned i = 0; i < r_; ++i) {
    a.coeffs[i] = index % pe_;
    index /= pe_;
  }
  return a;
}

std::uint64_t ChainRingSpec::index_of(const ChainRingElement& a) const {
  validate(a);
  std::uint64_t index = 0;
  for (unsigned i = r_; i-- > 0;) index = index * pe_ + a.coeffs[i];
  return index;
}

std::string ChainRingSpec::format(const ChainRingElement& a) const {
  if (r_ == 1) return std::to_string(a.coeffs.at(0));
  return format_poly(a.coeffs);
}

std::string ChainRingSpec::describe() const {
  if (r_ == 1) return "Z/" + std::to_string(pe_);
  return "GR(" + std::to_string(p_) + "^" + std::to_string(e_) + "," + std::to_string(r_) + ") mod " +
         format_poly(modulus_);
}

}  // namespace lcp
