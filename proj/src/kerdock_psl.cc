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

#include "tvd/kerdock_psl.h"

#include <stdexcept>

#include "tvd/io.h"

namespace tvd {

bool is_valid(const FieldContext& ctx, const PslElement& g) {
  return ctx.mul(g.alpha, g.delta) + ctx.mul(g.beta, g.gamma) == ctx.one();
}

PslElement multiply(const FieldContext& ctx, const PslElement& x, const PslElement& y) {
  return {ctx.mul(x.alpha, y.alpha) + ctx.mul(x.beta, y.gamma),
          ctx.mul(x.alpha, y.beta) + ctx.mul(x.beta, y.delta),
          ctx.mul(x.gamma, y.alpha) + ctx.mul(x.delta, y.gamma),
          ctx.mul(x.gamma, y.beta) + ctx.mul(x.delta, y.delta)};
}

PslElement inverse(const PslElement& g) { return {g.delta, g.beta, g.gamma, g.alpha}; }

PslElement frobenius(const FieldContext& ctx, const PslElement& g) {
  return {ctx.square(g.alpha), ctx.square(g.beta), ctx.square(g.gamma), ctx.square(g.delta)};
}

std::string to_string(const SubgroupLabel& label) {
  return label.infinite ? "inf" : hex(label.z.coeffs);
}

BitMatrix kerdock_matrix(const FieldContext& ctx, FieldElement z) {
  const BitMatrix az = ctx.mul_matrix(z);
  return az * az * ctx.gram();
}

SubgroupLabel classify_subgroup(const FieldContext& ctx, PauliIndex p) {
  if (p.is_identity()) throw std::invalid_argument("the identity Pauli has no subgroup label");
  if (p.a.is_zero()) return SubgroupLabel::inf();
  return SubgroupLabel::finite(ctx.div(p.b, p.a));
}

SymplecticMatrix psl_to_symplectic(const FieldContext& ctx, const PslElement& g) {
  if (!is_valid(ctx, g)) throw std::invalid_argument("PSL element must have determinant 1");
  const PslElement s = frobenius(ctx, g);
  return SymplecticMatrix(BitMatrix::block(ctx.mul_matrix(s.delta),
                                           ctx.mul_matrix(s.beta) * ctx.gram(),
                                           ctx.gram_inv() * ctx.mul_matrix(s.gamma),
                                           ctx.mul_matrix(s.alpha).transpose()));
}

PauliIndex apply_theta(const FieldContext& ctx, const PslElement& g, PauliIndex p) {
  return apply_psl(ctx, frobenius(ctx, g), p);
}

SubgroupLabel mobius_action(const FieldContext& ctx, const PslElement& g, SubgroupLabel label) {
  if (label.infinite) {
    if (g.gamma.is_zero()) return SubgroupLabel::inf();
    return SubgroupLabel::finite(ctx.div(g.delta, g.gamma));
  }
  const FieldElement num = g.beta + ctx.mul(g.delta, label.z);
  const FieldElement den = g.alpha + ctx.mul(g.gamma, label.z);
  if (den.is_zero()) return SubgroupLabel::inf();
  return SubgroupLabel::finite(ctx.div(num, den));
}

SubgroupLabel induced_subgroup_action(const FieldContext& ctx, const PslElement& g,
                                      SubgroupLabel label) {
  return mobius_action(ctx, frobenius(ctx, inverse(g)), label);
}

PslElement sample_psl(const FieldContext& ctx, Rng& rng) {
  const uint64_t n = ctx.size();
  // (alpha, gamma) != (0, 0), then one of the N solutions (beta, delta).
  const uint64_t first = 1 + uniform_below(rng, n * n - 1);
  const FieldElement alpha(static_cast<uint32_t>(first % n));
  const FieldElement gamma(static_cast<uint32_t>(first / n));
  const FieldElement free(static_cast<uint32_t>(uniform_below(rng, n)));
  if (!gamma.is_zero()) {
    // beta = (1 + alpha delta) / gamma.
    return {alpha, ctx.div(ctx.one() + ctx.mul(alpha, free), gamma), gamma, free};
  }
  return {alpha, free, gamma, ctx.inv(alpha)};
}

std::vector<PslElement> enumerate_psl(const FieldContext& ctx) {
  std::vector<PslElement> out;
  const uint32_t n = ctx.size();
  out.reserve(static_cast<size_t>(n + 1) * n * (n - 1));
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t c = 0; c < n; ++c) {
      if (a == 0 && c == 0) continue;
      const FieldElement alpha(a);
      const FieldElement gamma(c);
      for (uint32_t f = 0; f < n; ++f) {
        const FieldElement free(f);
        if (c != 0) {
          out.push_back({alpha, ctx.div(ctx.one() + ctx.mul(alpha, free), gamma), gamma, free});
        } else {
          out.push_back({alpha, free, gamma, ctx.inv(alpha)});
        }
      }
    }
  }
  return out;
}

std::vector<PslElement> psl_generators(const FieldContext& ctx) {
  std::vector<PslElement> gens;
  for (int i = 0; i < ctx.degree(); ++i) {
    gens.push_back({ctx.one(), ctx.exp(i), ctx.zero(), ctx.one()});
  }
  gens.push_back({ctx.alpha(), ctx.zero(), ctx.zero(), ctx.inv(ctx.alpha())});
  gens.push_back({ctx.zero(), ctx.one(), ctx.one(), ctx.zero()});
  return gens;
}

}  // namespace tvd
