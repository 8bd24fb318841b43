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

#ifndef TVD_PAULI_SYMPLECTIC_H
#define TVD_PAULI_SYMPLECTIC_H

#include <compare>
#include <cstdint>
#include <variant>

#include "tvd/bitmatrix.h"
#include "tvd/gf2m.h"
#include "tvd/random.h"

namespace tvd {

/// A Pauli operator modulo phase, E(a, b).
///
/// The binary form is the 2m-bit word with primal coordinates of a in the low
/// m bits and dual coordinates of b in the high m bits.
struct PauliIndex {
  FieldElement a;
  FieldElement b;

  bool is_identity() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const PauliIndex&, const PauliIndex&) = default;
  friend auto operator<=>(const PauliIndex&, const PauliIndex&) = default;
};

uint32_t to_binary(const FieldContext& ctx, PauliIndex p);
PauliIndex from_binary(const FieldContext& ctx, uint32_t word);

/// The binary symplectic form x Omega y^T on 2m-bit words.
inline int symplectic_form(int m, uint32_t x, uint32_t y) {
  const uint32_t lo = (1u << m) - 1u;
  return parity(((x & lo) & (y >> m)) ^ ((x >> m) & (y & lo)));
}

/// Tr(ad + bc); zero iff the two Paulis commute.
int symplectic_inner(const FieldContext& ctx, PauliIndex p, PauliIndex q);

/// F Omega F^T == Omega with Omega = [[0, I], [I, 0]].
bool is_symplectic(const BitMatrix& f);

/// A 2m x 2m binary matrix known to be symplectic. Acts on row vectors.
class SymplecticMatrix {
 public:
  /// Throws std::invalid_argument unless `f` is symplectic.
  explicit SymplecticMatrix(BitMatrix f);

  static SymplecticMatrix identity(int m);
  static SymplecticMatrix omega(int m);

  int m() const { return f_.rows() / 2; }
  const BitMatrix& matrix() const { return f_; }
  uint32_t row(int r) const { return f_.row(r); }

  uint32_t apply(uint32_t x) const { return vec_mul(x, f_); }
  /// [[D^T, B^T], [C^T, A^T]] for F = [[A, B], [C, D]].
  SymplecticMatrix inverse() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y);
  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  struct Trusted {};
  SymplecticMatrix(BitMatrix f, Trusted) : f_(std::move(f)) {}

  BitMatrix f_;
};

PauliIndex apply_symplectic(const FieldContext& ctx, const SymplecticMatrix& f, PauliIndex p);

/// Product F1 F2; the result acts as x -> (x F1) F2.
SymplecticMatrix compose(const SymplecticMatrix& f1, const SymplecticMatrix& f2);

// Generating set of the symplectic group.
struct OmegaGen {};
/// diag(Q, Q^{-T}); Q must be invertible.
struct LGen {
  BitMatrix q;
};
/// [[I, P], [0, I]]; P must be symmetric.
struct TGen {
  BitMatrix p;
};
/// [[L, U], [U, L]] with U = diag(I_t, 0), L = diag(0_t, I_{m-t}), 1 <= t <= m.
struct GGen {
  int t;
};
using Generator = std::variant<OmegaGen, LGen, TGen, GGen>;

SymplecticMatrix generator_matrix(int m, const Generator& gen);

/// The transvection x -> x + <x, h> h with h = E(h1, h2) in binary form.
struct Transvection {
  FieldElement h1;
  FieldElement h2;

  friend bool operator==(const Transvection&, const Transvection&) = default;
};

inline PauliIndex as_pauli(const Transvection& h) { return {h.h1, h.h2}; }

/// Z_h = I + Omega h^T h.
SymplecticMatrix transvection_matrix(const FieldContext& ctx, const Transvection& h);
SymplecticMatrix transvection_matrix(int m, uint32_t h);

/// Field-level evaluation: (a, b) + Tr(a h2 + b h1) (h1, h2).
PauliIndex apply_transvection(const FieldContext& ctx, const Transvection& h, PauliIndex p);

/// Binary fast path of the same map on 2m-bit words.
inline uint32_t transvect(int m, uint32_t h, uint32_t x) {
  return symplectic_form(m, x, h) ? x ^ h : x;
}

/// The vector h F, so that F^{-1} Z_h F = Z_{hF}.
Transvection conjugate_transvection(const FieldContext& ctx, const SymplecticMatrix& f,
                                    const Transvection& h);

/// Uniform over the N^2 - 1 nonzero vectors.
Transvection sample_transvection(const FieldContext& ctx, Rng& rng);

}  // namespace tvd

#endif  // TVD_PAULI_SYMPLECTIC_H
