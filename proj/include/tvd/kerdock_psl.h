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

#ifndef TVD_KERDOCK_PSL_H
#define TVD_KERDOCK_PSL_H

#include <compare>
#include <string>
#include <vector>

#include "tvd/gf2m.h"
#include "tvd/pauli_symplectic.h"
#include "tvd/random.h"

namespace tvd {

/// The matrix (alpha beta; gamma delta) over GF(2^m) with determinant 1.
/// In characteristic 2, SL(2, 2^m) = PSL(2, 2^m).
struct PslElement {
  FieldElement alpha;
  FieldElement beta;
  FieldElement gamma;
  FieldElement delta;

  static PslElement identity() {
    return {FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(1)};
  }
  friend bool operator==(const PslElement&, const PslElement&) = default;
  friend auto operator<=>(const PslElement&, const PslElement&) = default;
};

bool is_valid(const FieldContext& ctx, const PslElement& g);
/// Matrix product g1 g2.
PslElement multiply(const FieldContext& ctx, const PslElement& g1, const PslElement& g2);
/// (delta beta; gamma alpha).
PslElement inverse(const PslElement& g);
/// Entrywise square.
PslElement frobenius(const FieldContext& ctx, const PslElement& g);

/// A maximal commutative subgroup: b = a z for a finite label z, or a = 0 for infinity.
struct SubgroupLabel {
  bool infinite = false;
  FieldElement z;

  static SubgroupLabel inf() { return {true, FieldElement(0)}; }
  static SubgroupLabel finite(FieldElement z) { return {false, z}; }
  friend bool operator==(const SubgroupLabel&, const SubgroupLabel&) = default;
  friend auto operator<=>(const SubgroupLabel&, const SubgroupLabel&) = default;
};

std::string to_string(const SubgroupLabel& label);

/// P_z = A_z^2 W, which equals A_{z^2} W. Symmetric.
BitMatrix kerdock_matrix(const FieldContext& ctx, FieldElement z);

/// b / a, or infinity when a = 0.
SubgroupLabel classify_subgroup(const FieldContext& ctx, PauliIndex p);

/// theta(g) = [[A_{delta^2}, A_{beta^2} W], [W^{-1} A_{gamma^2}, A_{alpha^2}^T]].
SymplecticMatrix psl_to_symplectic(const FieldContext& ctx, const PslElement& g);

/// The action of theta(g) on field pairs: (a, b) -> (a delta^2 + b gamma^2, a beta^2 + b alpha^2).
inline PauliIndex apply_psl(const FieldContext& ctx, const PslElement& sq, PauliIndex p) {
  return {ctx.mul(p.a, sq.delta) + ctx.mul(p.b, sq.gamma),
          ctx.mul(p.a, sq.beta) + ctx.mul(p.b, sq.alpha)};
}
/// Same as apply_psl but takes g itself; squares on every call.
PauliIndex apply_theta(const FieldContext& ctx, const PslElement& g, PauliIndex p);

/// z -> (beta + delta z) / (alpha + gamma z) on the projective line.
SubgroupLabel mobius_action(const FieldContext& ctx, const PslElement& g, SubgroupLabel label);

/// The label map actually realized by theta(g) on b = a z labels:
/// classify(p theta(g)) = induced_subgroup_action(g, classify(p)).
SubgroupLabel induced_subgroup_action(const FieldContext& ctx, const PslElement& g,
                                      SubgroupLabel label);

/// Uniform over the (N + 1) N (N - 1) group elements.
PslElement sample_psl(const FieldContext& ctx, Rng& rng);

/// Every group element once, in the parametrization sample_psl draws from.
std::vector<PslElement> enumerate_psl(const FieldContext& ctx);

/// (1 alpha^i; 0 1) for i < m, (alpha 0; 0 alpha^{-1}) and (0 1; 1 0).
std::vector<PslElement> psl_generators(const FieldContext& ctx);

}  // namespace tvd

#endif  // TVD_KERDOCK_PSL_H
