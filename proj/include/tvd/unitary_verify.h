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

#ifndef TVD_UNITARY_VERIFY_H
#define TVD_UNITARY_VERIFY_H

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "tvd/design_sampler.h"
#include "tvd/gf2m.h"
#include "tvd/kerdock_psl.h"
#include "tvd/parallel.h"
#include "tvd/pauli_symplectic.h"

namespace tvd {

/// Dense matrices are built for at most this many qubits.
inline constexpr int kDenseMaxQubits = 3;

/// Computational basis e_v, v in F_2^m with bit q for qubit q. Qubit 0 is the
/// first Kronecker factor, so it is the most significant bit of the row index.
int basis_index(int m, uint32_t v);

/// D(x, z) = X^x Z^z on m qubits, word = x | (z << m). With `hermitian` the
/// result is multiplied by i^{x.z mod 2}, giving E(x, z).
Eigen::MatrixXcd pauli_matrix(int m, uint32_t word, bool hermitian = true);
/// D(a, b) or E(a, b) with x = primal(a) and z = dual(b).
Eigen::MatrixXcd pauli_unitary(const FieldContext& ctx, PauliIndex p, bool hermitian = true);

/// H^{(x)m} for Omega; e_v -> e_{vQ} for L_Q; diag(i^{v P v^T mod 4}) for T_P;
/// Hadamard on qubits 0 .. t-1 for G_t.
Eigen::MatrixXcd generator_unitary(int m, const Generator& gen);

/// (I + i E(h)) / sqrt(2).
Eigen::MatrixXcd transvection_unitary(int m, uint32_t h);
Eigen::MatrixXcd transvection_unitary(const FieldContext& ctx, const Transvection& h);

/// Product of generator unitaries realizing theta(g). For gamma != 0 the
/// factors are T, L, Omega, L, T; for gamma = 0 they are L_{A_delta^2} and
/// T_{A_{(beta/delta)^2} W}.
Eigen::MatrixXcd psl_unitary(const FieldContext& ctx, const PslElement& g);

struct ConjugationResult {
  bool ok = true;
  uint32_t first_failure = 0;  // binary word of the first failing Pauli
  double residual = 0;         // at the first failure, or the worst case when ok
};

/// U E(x) U^dagger == +-E(x F) for every nonzero x.
ConjugationResult conjugation_check(const Eigen::MatrixXcd& u, const SymplecticMatrix& f,
                                    double tol = 1e-8);

bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

struct Ensemble {
  std::vector<Eigen::MatrixXcd> unitaries;
  std::vector<double> weights;

  static Ensemble uniform(std::vector<Eigen::MatrixXcd> us);
};

/// sum_{i,j} w_i w_j |tr(U_i^dagger U_j)|^{2k}. Both paths return the same
/// bits: rows are reduced in parallel and summed serially.
double frame_potential(const Ensemble& e, int k, Exec exec = Exec::kParallel);

/// Frame potential of a uniformly weighted sample of S unitaries, split into
/// the diagonal part (S N^{2k} / S^2) and the mean over i != j.
struct FrameEstimate {
  double value = 0;      // includes the diagonal, as frame_potential
  double off_diagonal = 0;
  /// Standard error of off_diagonal, 2 sd(row means) / sqrt(S).
  double std_error = 0;
  int64_t samples = 0;
};
FrameEstimate frame_potential_estimate(const Ensemble& e, int k, Exec exec = Exec::kParallel);

/// Pauli * U_psl * U_{h_t} ... U_{h_1}.
Eigen::MatrixXcd sample_unitary(const FieldContext& ctx, const DesignSample& s);
Ensemble ensemble_from_samples(const FieldContext& ctx, const std::vector<DesignSample>& samples,
                               Exec exec = Exec::kParallel);

/// Every psl_unitary times every Pauli, uniformly weighted.
Ensemble kerdock_ensemble(const FieldContext& ctx);

/// The Clifford group on m <= 2 qubits modulo phase, generated from Hadamard,
/// phase and CNOT gates. Uniformly weighted.
Ensemble clifford_group(int m);

}  // namespace tvd

#endif  // TVD_UNITARY_VERIFY_H
