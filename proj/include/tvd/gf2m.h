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

#ifndef TVD_GF2M_H
#define TVD_GF2M_H

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvd/bitmatrix.h"

namespace tvd {

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 16;

/// An element of GF(2^m) in primal coordinates.
///
/// Bit i of `coeffs` is the coefficient of alpha^i, where alpha is the root of
/// the context's primitive polynomial.
struct FieldElement {
  uint32_t coeffs = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(uint32_t c) : coeffs(c) {}

  constexpr bool is_zero() const { return coeffs == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Field addition is XOR of primal coordinates; it needs no context.
constexpr FieldElement operator+(FieldElement x, FieldElement y) {
  return FieldElement(x.coeffs ^ y.coeffs);
}

/// Thrown when a polynomial cannot define the field. Carries a witness: a
/// nontrivial factor for reducible input, or the actual multiplicative order
/// of the root for irreducible but non-primitive input.
class PolynomialError : public std::invalid_argument {
 public:
  enum class Reason { kBadDegree, kReducible, kNotPrimitive };

  PolynomialError(Reason reason, uint32_t poly, uint64_t witness, const std::string& what)
      : std::invalid_argument(what), reason_(reason), poly_(poly), witness_(witness) {}

  Reason reason() const { return reason_; }
  uint32_t polynomial() const { return poly_; }
  /// A factor polynomial (kReducible), the order of alpha (kNotPrimitive), or
  /// the observed degree (kBadDegree).
  uint64_t witness() const { return witness_; }

 private:
  Reason reason_;
  uint32_t poly_;
  uint64_t witness_;
};

/// Immutable arithmetic environment for GF(2^m), 2 <= m <= 16.
///
/// Polynomials are coefficient words including the leading x^m term, so
/// x^3 + x + 1 is 0xB. The gram matrix W has W_ij = Tr(alpha^(i+j)) and maps
/// primal coordinates to dual coordinates: dual(a) = primal(a) W.
class FieldContext {
 public:
  /// Builds the field, verifying irreducibility and primitivity of `poly`
  /// (the built-in default for `m` when absent).
  explicit FieldContext(int m, std::optional<uint32_t> poly = std::nullopt);

  static uint32_t default_polynomial(int m);

  int degree() const { return m_; }
  uint32_t polynomial() const { return poly_; }
  /// N = 2^m.
  uint32_t size() const { return 1u << m_; }
  /// Mask covering the m coordinate bits.
  uint32_t mask() const { return size() - 1u; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement alpha() const { return FieldElement(2u); }

  /// alpha^i for any integer exponent i (reduced modulo N - 1).
  FieldElement exp(int64_t i) const;
  /// Discrete logarithm base alpha; domain_error for zero.
  int log(FieldElement a) const;

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return FieldElement(antilog_[log_[a.coeffs] + log_[b.coeffs]]);
  }
  FieldElement square(FieldElement a) const { return mul(a, a); }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, int64_t e) const;
  /// The unique square root (the Frobenius map is a bijection).
  FieldElement sqrt(FieldElement a) const;

  /// Absolute trace to F_2, evaluated through the precomputed trace of each
  /// primal basis element.
  int trace(FieldElement a) const { return parity(a.coeffs & trace_mask_); }
  /// Bit i is Tr(alpha^i).
  uint32_t trace_mask() const { return trace_mask_; }

  /// Dual coordinates primal(a) W.
  uint32_t dual_coords(FieldElement a) const { return to_dual_[a.coeffs]; }
  /// Inverse of dual_coords.
  FieldElement from_dual(uint32_t dual) const { return FieldElement(from_dual_[dual]); }

  const BitMatrix& gram() const { return gram_; }
  const BitMatrix& gram_inv() const { return gram_inv_; }

  /// The companion matrix A of the polynomial: multiplication by alpha.
  BitMatrix companion() const { return mul_matrix(alpha()); }
  /// A_z with primal(x z) = primal(x) A_z.
  BitMatrix mul_matrix(FieldElement z) const;

  /// The basis beta_0..beta_{m-1} with Tr(alpha^i beta_j) = [i == j].
  std::vector<FieldElement> dual_basis() const;

  /// All N elements in coefficient order 0, 1, ..., N - 1.
  std::vector<FieldElement> elements() const;

 private:
  int m_;
  uint32_t poly_;
  uint32_t trace_mask_ = 0;
  std::vector<uint32_t> antilog_;  // length 2(N-1): antilog_[i] = alpha^i
  std::vector<int> log_;           // log_[0] unused
  std::vector<uint32_t> to_dual_;
  std::vector<uint32_t> from_dual_;
  BitMatrix gram_;
  BitMatrix gram_inv_;
};

/// Polynomial helpers over F_2 on coefficient words (bit i = coefficient of x^i).
namespace poly2 {
int degree(uint64_t p);
uint64_t mod(uint64_t a, uint64_t b);
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t modulus);
/// Smallest nontrivial factor, or 0 if irreducible.
uint64_t find_factor(uint64_t p);
std::string to_string(uint64_t p);
}  // namespace poly2

}  // namespace tvd

#endif  // TVD_GF2M_H
