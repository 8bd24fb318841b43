// Copyright 2026 The tvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tvd/gf2m.h"

#include <array>
#include <bit>

namespace tvd {

namespace {

// Primitive polynomials indexed by degree; entries below kMinDegree unused.
constexpr std::array<uint32_t, kMaxDegree + 1> kDefaultPoly = {
    0x0,     0x0,                                   //
    0x7,     /* x^2 + x + 1 */
    0xB,     /* x^3 + x + 1 */
    0x13,    /* x^4 + x + 1 */
    0x25,    /* x^5 + x^2 + 1 */
    0x43,    /* x^6 + x + 1 */
    0x89,    /* x^7 + x^3 + 1 */
    0x11D,   /* x^8 + x^4 + x^3 + x^2 + 1 */
    0x211,   /* x^9 + x^4 + 1 */
    0x409,   /* x^10 + x^3 + 1 */
    0x805,   /* x^11 + x^2 + 1 */
    0x1053,  /* x^12 + x^6 + x^4 + x + 1 */
    0x201B,  /* x^13 + x^4 + x^3 + x + 1 */
    0x4443,  /* x^14 + x^10 + x^6 + x + 1 */
    0x8003,  /* x^15 + x + 1 */
    0x1100B, /* x^16 + x^12 + x^3 + x + 1 */
};

void check_degree(int m) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw std::invalid_argument("field degree must lie in [2, 16], got " + std::to_string(m));
  }
}

}  // namespace

namespace poly2 {

int degree(uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

uint64_t mod(uint64_t a, uint64_t b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t modulus) {
  uint64_t acc = 0;
  a = mod(a, modulus);
  while (b) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a = mod(a << 1, modulus);
  }
  return acc;
}

uint64_t find_factor(uint64_t p) {
  const int d = degree(p);
  for (int fd = 1; fd <= d / 2; ++fd) {
    for (uint64_t low = 0; low < (uint64_t{1} << fd); ++low) {
      const uint64_t f = (uint64_t{1} << fd) | low;
      if (mod(p, f) == 0) return f;
    }
  }
  return 0;
}

std::string to_string(uint64_t p) {
  if (p == 0) return "0";
  std::string s;
  for (int i = degree(p); i >= 0; --i) {
    if (!((p >> i) & 1u)) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += "1";
    } else if (i == 1) {
      s += "x";
    } else {
      s += "x^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace poly2

uint32_t FieldContext::default_polynomial(int m) {
  check_degree(m);
  return kDefaultPoly[m];
}

FieldContext::FieldContext(int m, std::optional<uint32_t> poly)
    : m_(m), poly_(poly.value_or(0)) {
  check_degree(m);
  if (!poly) poly_ = kDefaultPoly[m];
  if (poly2::degree(poly_) != m) {
    throw PolynomialError(PolynomialError::Reason::kBadDegree, poly_,
                          static_cast<uint64_t>(poly2::degree(poly_)),
                          "polynomial " + poly2::to_string(poly_) + " does not have degree " +
                              std::to_string(m));
  }
  if (const uint64_t factor = poly2::find_factor(poly_)) {
    throw PolynomialError(PolynomialError::Reason::kReducible, poly_, factor,
                          "polynomial " + poly2::to_string(poly_) + " is divisible by " +
                              poly2::to_string(factor));
  }

  const uint32_t n = size();
  const uint32_t order = n - 1;
  antilog_.assign(2 * order, 0);
  log_.assign(n, 0);

  // Powers of alpha by repeated multiplication with x, reduced by poly_.
  uint32_t x = 1;
  for (uint32_t i = 0; i < order; ++i) {
    if (i > 0 && x == 1) {
      throw PolynomialError(PolynomialError::Reason::kNotPrimitive, poly_, i,
                            "polynomial " + poly2::to_string(poly_) +
                                " is not primitive: alpha has order " + std::to_string(i));
    }
    antilog_[i] = x;
    log_[x] = static_cast<int>(i);
    x <<= 1;
    if (x & n) x ^= poly_;
  }
  for (uint32_t i = order; i < 2 * order; ++i) antilog_[i] = antilog_[i - order];

  // Tr(alpha^i) = alpha^i + alpha^(2i) + ... + alpha^(2^(m-1) i), which lands in F_2.
  for (int i = 0; i < m_; ++i) {
    const FieldElement b = exp(i);
    FieldElement term = b;
    FieldElement sum = b;
    for (int k = 1; k < m_; ++k) {
      term = square(term);
      sum = sum + term;
    }
    if (sum.coeffs > 1) throw std::logic_error("trace left F_2; field tables are corrupt");
    if (sum.coeffs) trace_mask_ |= 1u << i;
  }

  gram_ = BitMatrix(m_, m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) gram_.set(i, j, trace(exp(i + j)));
  }
  auto inv = gram_.inverse();
  if (!inv) throw std::logic_error("trace form is degenerate");
  gram_inv_ = *inv;

  to_dual_.resize(n);
  from_dual_.resize(n);
  for (uint32_t a = 0; a < n; ++a) {
    const uint32_t d = vec_mul(a, gram_);
    to_dual_[a] = d;
    from_dual_[d] = a;
  }
}

FieldElement FieldContext::exp(int64_t i) const {
  const int64_t order = size() - 1;
  int64_t r = i % order;
  if (r < 0) r += order;
  return FieldElement(antilog_[r]);
}

int FieldContext::log(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("log of zero");
  return log_[a.coeffs];
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in GF(2^m)");
  const int order = static_cast<int>(size() - 1);
  return FieldElement(antilog_[(order - log_[a.coeffs]) % order]);
}

FieldElement FieldContext::pow(FieldElement a, int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return one();
    if (e < 0) throw std::domain_error("negative power of zero");
    return zero();
  }
  return exp(static_cast<int64_t>(log_[a.coeffs]) * (e % static_cast<int64_t>(size() - 1)));
}

FieldElement FieldContext::sqrt(FieldElement a) const {
  // a^(2^(m-1)) is the inverse of the Frobenius map.
  FieldElement r = a;
  for (int k = 1; k < m_; ++k) r = square(r);
  return r;
}

BitMatrix FieldContext::mul_matrix(FieldElement z) const {
  BitMatrix a(m_, m_);
  for (int i = 0; i < m_; ++i) a.set_row(i, mul(exp(i), z).coeffs);
  return a;
}

std::vector<FieldElement> FieldContext::dual_basis() const {
  std::vector<FieldElement> out;
  out.reserve(m_);
  for (int j = 0; j < m_; ++j) out.push_back(FieldElement(gram_inv_.row(j)));
  return out;
}

std::vector<FieldElement> FieldContext::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size());
  for (uint32_t a = 0; a < size(); ++a) out.push_back(FieldElement(a));
  return out;
}

}  // namespace tvd
