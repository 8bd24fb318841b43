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

#include "tvd/pauli_symplectic.h"

#include <stdexcept>
#include <utility>

namespace tvd {

uint32_t to_binary(const FieldContext& ctx, PauliIndex p) {
  return p.a.coeffs | (ctx.dual_coords(p.b) << ctx.degree());
}

PauliIndex from_binary(const FieldContext& ctx, uint32_t word) {
  return {FieldElement(word & ctx.mask()), ctx.from_dual(word >> ctx.degree())};
}

int symplectic_inner(const FieldContext& ctx, PauliIndex p, PauliIndex q) {
  return ctx.trace(ctx.mul(p.a, q.b) + ctx.mul(p.b, q.a));
}

bool is_symplectic(const BitMatrix& f) {
  if (f.rows() != f.cols() || f.rows() % 2 != 0 || f.rows() == 0) return false;
  const int m = f.rows() / 2;
  // Entry (i, j) of F Omega F^T is the form of rows i and j.
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = i; j < 2 * m; ++j) {
      const int want = (j - i == m) ? 1 : 0;
      if (symplectic_form(m, f.row(i), f.row(j)) != want) return false;
    }
  }
  return true;
}

SymplecticMatrix::SymplecticMatrix(BitMatrix f) : f_(std::move(f)) {
  if (!is_symplectic(f_)) throw std::invalid_argument("matrix is not symplectic");
}

SymplecticMatrix SymplecticMatrix::identity(int m) {
  return SymplecticMatrix(BitMatrix::identity(2 * m), Trusted{});
}

SymplecticMatrix SymplecticMatrix::omega(int m) {
  const BitMatrix z(m, m);
  const BitMatrix i = BitMatrix::identity(m);
  return SymplecticMatrix(BitMatrix::block(z, i, i, z), Trusted{});
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const int n = m();
  const BitMatrix a = f_.sub(0, 0, n, n);
  const BitMatrix b = f_.sub(0, n, n, n);
  const BitMatrix c = f_.sub(n, 0, n, n);
  const BitMatrix d = f_.sub(n, n, n, n);
  return SymplecticMatrix(
      BitMatrix::block(d.transpose(), b.transpose(), c.transpose(), a.transpose()), Trusted{});
}

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
  if (x.m() != y.m()) throw std::invalid_argument("symplectic product: dimension mismatch");
  return SymplecticMatrix(x.f_ * y.f_, SymplecticMatrix::Trusted{});
}

SymplecticMatrix compose(const SymplecticMatrix& f1, const SymplecticMatrix& f2) {
  return f1 * f2;
}

PauliIndex apply_symplectic(const FieldContext& ctx, const SymplecticMatrix& f, PauliIndex p) {
  if (f.m() != ctx.degree()) throw std::invalid_argument("symplectic matrix has wrong size");
  return from_binary(ctx, f.apply(to_binary(ctx, p)));
}

SymplecticMatrix generator_matrix(int m, const Generator& gen) {
  const BitMatrix zero(m, m);
  const BitMatrix id = BitMatrix::identity(m);
  auto check_size = [m](const BitMatrix& x, const char* name) {
    if (x.rows() != m || x.cols() != m) {
      throw std::invalid_argument(std::string(name) + " must be m x m");
    }
  };
  BitMatrix f;
  if (std::holds_alternative<OmegaGen>(gen)) {
    return SymplecticMatrix::omega(m);
  } else if (const auto* l = std::get_if<LGen>(&gen)) {
    check_size(l->q, "Q");
    auto qinv = l->q.inverse();
    if (!qinv) throw std::invalid_argument("L_Q requires an invertible Q");
    f = BitMatrix::block(l->q, zero, zero, qinv->transpose());
  } else if (const auto* tp = std::get_if<TGen>(&gen)) {
    check_size(tp->p, "P");
    if (!tp->p.is_symmetric()) throw std::invalid_argument("T_P requires a symmetric P");
    f = BitMatrix::block(id, tp->p, zero, id);
  } else {
    const int t = std::get<GGen>(gen).t;
    if (t < 1 || t > m) throw std::invalid_argument("G_t requires 1 <= t <= m");
    BitMatrix u(m, m);
    BitMatrix l(m, m);
    for (int i = 0; i < m; ++i) (i < t ? u : l).set(i, i, true);
    f = BitMatrix::block(l, u, u, l);
  }
  return SymplecticMatrix(std::move(f));
}

SymplecticMatrix transvection_matrix(int m, uint32_t h) {
  const uint32_t full = (m == 16) ? ~0u : ((1u << (2 * m)) - 1u);
  if (h == 0 || (h & ~full)) throw std::invalid_argument("transvection vector must be nonzero");
  BitMatrix z = BitMatrix::identity(2 * m);
  for (int i = 0; i < 2 * m; ++i) {
    // (Omega h^T)_i picks the bit of h in the opposite block.
    if ((h >> ((i + m) % (2 * m))) & 1u) z.set_row(i, z.row(i) ^ h);
  }
  return SymplecticMatrix(std::move(z));
}

SymplecticMatrix transvection_matrix(const FieldContext& ctx, const Transvection& h) {
  return transvection_matrix(ctx.degree(), to_binary(ctx, as_pauli(h)));
}

PauliIndex apply_transvection(const FieldContext& ctx, const Transvection& h, PauliIndex p) {
  if (!ctx.trace(ctx.mul(p.a, h.h2) + ctx.mul(p.b, h.h1))) return p;
  return {p.a + h.h1, p.b + h.h2};
}

Transvection conjugate_transvection(const FieldContext& ctx, const SymplecticMatrix& f,
                                    const Transvection& h) {
  if (h.h1.is_zero() && h.h2.is_zero()) throw std::invalid_argument("zero transvection");
  const PauliIndex q = apply_symplectic(ctx, f, as_pauli(h));
  return {q.a, q.b};
}

Transvection sample_transvection(const FieldContext& ctx, Rng& rng) {
  const uint64_t n2 = uint64_t{ctx.size()} * ctx.size();
  const PauliIndex p = from_binary(ctx, static_cast<uint32_t>(1 + uniform_below(rng, n2 - 1)));
  return {p.a, p.b};
}

}  // namespace tvd
