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

#ifndef TVD_ORBIT_MARKOV_H
#define TVD_ORBIT_MARKOV_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvd/gf2m.h"
#include "tvd/parallel.h"
#include "tvd/pauli_graph.h"

namespace tvd {

enum class ChainKind { kEdges, kNonEdges };

const char* to_string(ChainKind kind);

/// Dense stochastic matrix with exact entries num(i, j) / den.
struct TransitionMatrix {
  std::vector<OrbitInvariant> states;  // empty when states are not orbits
  int n = 0;
  int64_t den = 1;
  std::vector<int64_t> num;  // row-major n x n

  int64_t at(int i, int j) const { return num[static_cast<size_t>(i) * n + j]; }
  int64_t& at(int i, int j) { return num[static_cast<size_t>(i) * n + j]; }
  Eigen::MatrixXd to_double() const;
  /// Every row sums to den and no entry is negative.
  bool is_stochastic() const;
  /// Same matrix with numerators and denominator multiplied by k.
  TransitionMatrix scaled(int64_t k) const;

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
};

/// Number of type-1 orbits, N - 2.
int type1_orbit_count(int m);
/// Number of type-2 orbits, (N - 2) / 2.
int type2_orbit_count(int m);

/// Edge chain: type-1 invariants alpha^1 .. alpha^{N-2}, then nonzero trace-0
/// values, each in discrete-log order. Non-edge chain: trace-1 values in
/// discrete-log order.
std::vector<OrbitInvariant> orbit_states(const FieldContext& ctx, ChainKind kind);

/// A fixed pair in the orbit: ((s, 0), (1, 0)) for type-1 invariant s and
/// ((x, 0), (0, 1)) otherwise.
PauliPair representative(const FieldContext& ctx, const OrbitInvariant& inv);

/// For each state, how many of the N^2 - 1 transvections move `pair` to it.
std::vector<int64_t> transvection_row(const FieldContext& ctx, const PauliPair& pair,
                                      const std::vector<OrbitInvariant>& states);

/// Raw transvection counts over denominator N^2 - 1.
TransitionMatrix transvection_counts(const FieldContext& ctx, ChainKind kind,
                                     Exec exec = Exec::kParallel);

/// The orbit chain over denominator 4(N^2 - 1).
TransitionMatrix q_empirical(const FieldContext& ctx, ChainKind kind,
                             Exec exec = Exec::kParallel);

/// [(N^2 - 4) I + 6 N J] / (4 (N^2 - 1)) of size N/2.
TransitionMatrix q1_closed_form(int m);

struct StructureReport {
  bool ok = true;
  std::vector<std::string> failures;
  /// Lower-left block numerators over 4(N^2 - 1); (N-2)/2 rows, N-2 columns.
  std::vector<std::vector<int64_t>> r;
};

/// Block checks on the edge chain: the type-1 diagonal block, the type-2
/// block against the closed form, the upper-right block against N R^T, and
/// the row and column sums of R.
StructureReport q0_structure_check(int m, const TransitionMatrix& q0);

/// Exact check of w Q = (lam_num / lam_den) w.
bool is_left_eigenvector(const TransitionMatrix& q, const std::vector<int64_t>& w,
                         int64_t lam_num, int64_t lam_den);

struct SpectralReport {
  std::vector<std::complex<double>> eigenvalues;  // descending real part
  double lambda2 = 0;
  double lambda_min = 0;
  double gap = 0;
  double max_imag = 0;
  std::vector<double> stationary;
  double stationary_residual = 0;
};

SpectralReport spectral_report(const TransitionMatrix& q);

/// Left fixed vector normalized to sum 1.
std::vector<double> stationary_distribution(const TransitionMatrix& q);

struct SingularReport {
  double sigma_max = 0;
  double bound = 0;  // 3 sqrt(2) N
  bool within = false;
  bool equality = false;
};

SingularReport singular_check_R(const std::vector<std::vector<int64_t>>& r, int m,
                                double tol = 1e-9);

/// Analytic bounds on the second and smallest eigenvalues of the edge chain.
double lambda_q0_upper(int m);
double lambda_q0_lower(int m);

/// ceil((1 / Delta) ln(N^3 (N^2 - 4) / (2 eps))) with Delta from the analytic
/// eigenvalue bounds. Requires 0 < eps < 1.
int64_t mixing_time_bound(int m, double eps);

struct MixingReport {
  int m = 0;
  double eps = 0;
  double lambda_upper = 0;
  double lambda_lower = 0;
  double gap = 0;
  double pi_star = 0;
  double log_term = 0;
  int64_t bound = 0;
  /// The same bound with 1 / (1 - lambda) replaced by 4/3.
  int64_t large_n_approximation = 0;
  /// The same bound with the numerically computed gap, when supplied.
  std::optional<int64_t> numeric_bound;
  std::optional<double> numeric_gap;
};

MixingReport mixing_report(int m, double eps, const SpectralReport* numeric = nullptr);

/// TV(t) = 1/2 |s Q^t - pi|_1 for t = 0 .. t_max.
std::vector<double> tv_curve(const TransitionMatrix& q, const std::vector<double>& start,
                             int t_max, const std::vector<double>& pi);

/// The transvection walk on every ordered pair of one class, stored sparsely.
struct FullChain {
  ChainKind kind;
  int64_t den = 1;
  std::vector<PauliPair> states;
  std::vector<std::vector<std::pair<int, int64_t>>> rows;
};

inline constexpr int kFullChainMaxDegree = 3;

FullChain full_chain(const FieldContext& ctx, ChainKind kind, Exec exec = Exec::kParallel);

/// Column sums equal den, i.e. the uniform vector is exactly stationary.
bool uniform_is_stationary(const FullChain& chain);

/// Aggregates the full chain by orbit invariant. Throws std::runtime_error if
/// two pairs of the same orbit produce different aggregated rows.
TransitionMatrix lump(const FieldContext& ctx, const FullChain& chain,
                      const std::vector<OrbitInvariant>& states);

/// Exact JSON: {"den": d, "n": n, "num": [[...]], "states": [...]}.
std::string to_json(const TransitionMatrix& q, int indent = -1);
TransitionMatrix transition_from_json(const std::string& text);
/// Floating view, one row per line.
std::string to_csv(const Eigen::MatrixXd& q);
Eigen::MatrixXd matrix_from_csv(const std::string& text);

}  // namespace tvd

#endif  // TVD_ORBIT_MARKOV_H
