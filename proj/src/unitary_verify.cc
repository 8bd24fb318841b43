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

#include "tvd/unitary_verify.h"

#include <cmath>
#include <complex>
#include <deque>
#include <set>
#include <stdexcept>

namespace tvd {

namespace {

using cd = std::complex<double>;
constexpr cd kI(0.0, 1.0);

void check_qubits(int m) {
  if (m < 1 || m > kDenseMaxQubits) {
    throw std::invalid_argument("dense unitaries need 1 <= m <= " +
                                std::to_string(kDenseMaxQubits));
  }
}

Eigen::MatrixXcd hadamard_on(int m, uint32_t qubits) {
  const int dim = 1 << m;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  const double scale = std::pow(2.0, -0.5 * std::popcount(qubits));
  for (uint32_t v = 0; v < static_cast<uint32_t>(dim); ++v) {
    for (uint32_t w = 0; w < static_cast<uint32_t>(dim); ++w) {
      if ((v ^ w) & ~qubits) continue;
      const double sign = parity(v & w & qubits) ? -1.0 : 1.0;
      u(basis_index(m, w), basis_index(m, v)) = sign * scale;
    }
  }
  return u;
}

Eigen::MatrixXcd permutation(int m, const BitMatrix& q) {
  const int dim = 1 << m;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint32_t v = 0; v < static_cast<uint32_t>(dim); ++v) {
    u(basis_index(m, vec_mul(v, q)), basis_index(m, v)) = 1.0;
  }
  return u;
}

Eigen::MatrixXcd phase_diag(int m, const BitMatrix& p) {
  const int dim = 1 << m;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint32_t v = 0; v < static_cast<uint32_t>(dim); ++v) {
    int quad = 0;  // v P v^T over the integers
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) quad += ((v >> i) & 1u) & ((v >> j) & 1u) & p.get(i, j);
    }
    u(basis_index(m, v), basis_index(m, v)) = std::pow(kI, quad % 4);
  }
  return u;
}

// Canonical key of U modulo a global phase.
std::vector<int64_t> phase_key(const Eigen::MatrixXcd& u) {
  cd phase(1.0, 0.0);
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    if (std::abs(u.data()[k]) > 1e-6) {
      phase = u.data()[k] / std::abs(u.data()[k]);
      break;
    }
  }
  std::vector<int64_t> key;
  key.reserve(2 * u.size());
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    const cd z = u.data()[k] / phase;
    key.push_back(std::llround(z.real() * 1e6));
    key.push_back(std::llround(z.imag() * 1e6));
  }
  return key;
}

}  // namespace

int basis_index(int m, uint32_t v) {
  int idx = 0;
  for (int q = 0; q < m; ++q) idx |= static_cast<int>((v >> q) & 1u) << (m - 1 - q);
  return idx;
}

Eigen::MatrixXcd pauli_matrix(int m, uint32_t word, bool hermitian) {
  check_qubits(m);
  const uint32_t lo = (1u << m) - 1u;
  const uint32_t x = word & lo;
  const uint32_t z = (word >> m) & lo;
  const int dim = 1 << m;
  const cd phase = (hermitian && parity(x & z)) ? kI : cd(1.0);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint32_t v = 0; v < static_cast<uint32_t>(dim); ++v) {
    u(basis_index(m, v ^ x), basis_index(m, v)) = phase * (parity(v & z) ? -1.0 : 1.0);
  }
  return u;
}

Eigen::MatrixXcd pauli_unitary(const FieldContext& ctx, PauliIndex p, bool hermitian) {
  return pauli_matrix(ctx.degree(), to_binary(ctx, p), hermitian);
}

Eigen::MatrixXcd generator_unitary(int m, const Generator& gen) {
  check_qubits(m);
  // Validates the parameter the same way the symplectic side does.
  (void)generator_matrix(m, gen);
  if (std::holds_alternative<OmegaGen>(gen)) return hadamard_on(m, (1u << m) - 1u);
  if (const auto* l = std::get_if<LGen>(&gen)) return permutation(m, l->q);
  if (const auto* t = std::get_if<TGen>(&gen)) return phase_diag(m, t->p);
  return hadamard_on(m, (1u << std::get<GGen>(gen).t) - 1u);
}

Eigen::MatrixXcd transvection_unitary(int m, uint32_t h) {
  check_qubits(m);
  if (h == 0) throw std::invalid_argument("transvection vector must be nonzero");
  const int dim = 1 << m;
  return (Eigen::MatrixXcd::Identity(dim, dim) + kI * pauli_matrix(m, h, true)) / std::sqrt(2.0);
}

Eigen::MatrixXcd transvection_unitary(const FieldContext& ctx, const Transvection& h) {
  return transvection_unitary(ctx.degree(), to_binary(ctx, as_pauli(h)));
}

Eigen::MatrixXcd psl_unitary(const FieldContext& ctx, const PslElement& g) {
  const int m = ctx.degree();
  check_qubits(m);
  if (!is_valid(ctx, g)) throw std::invalid_argument("PSL element must have determinant 1");
  auto t_of = [&](FieldElement z) {
    return generator_unitary(m, TGen{ctx.mul_matrix(ctx.square(z)) * ctx.gram()});
  };
  auto l_of = [&](BitMatrix q) { return generator_unitary(m, LGen{std::move(q)}); };
  // A symplectic product F1 F2 ... is realized by U_k ... U_2 U_1.
  if (g.gamma.is_zero()) {
    return t_of(ctx.div(g.beta, g.delta)) * l_of(ctx.mul_matrix(ctx.square(g.delta)));
  }
  const Eigen::MatrixXcd t1 = t_of(ctx.div(g.delta, g.gamma));
  const Eigen::MatrixXcd l1 = l_of(ctx.mul_matrix(ctx.inv(ctx.square(g.gamma))));
  const Eigen::MatrixXcd om = generator_unitary(m, OmegaGen{});
  const Eigen::MatrixXcd l2 = l_of(ctx.gram_inv());
  const Eigen::MatrixXcd t2 = t_of(ctx.div(g.alpha, g.gamma));
  return t2 * l2 * om * l1 * t1;
}

ConjugationResult conjugation_check(const Eigen::MatrixXcd& u, const SymplecticMatrix& f,
                                    double tol) {
  const int m = f.m();
  if (u.rows() != (1 << m) || u.cols() != (1 << m)) {
    throw std::invalid_argument("unitary and symplectic matrix sizes disagree");
  }
  ConjugationResult res;
  const Eigen::MatrixXcd ud = u.adjoint();
  for (uint32_t x = 1; x < (1u << (2 * m)); ++x) {
    const Eigen::MatrixXcd lhs = u * pauli_matrix(m, x) * ud;
    const Eigen::MatrixXcd rhs = pauli_matrix(m, f.apply(x));
    const double r = std::min((lhs - rhs).cwiseAbs().maxCoeff(), (lhs + rhs).cwiseAbs().maxCoeff());
    if (r > tol) return {false, x, r};
    res.residual = std::max(res.residual, r);
  }
  return res;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd d = u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

Ensemble Ensemble::uniform(std::vector<Eigen::MatrixXcd> us) {
  Ensemble e;
  e.weights.assign(us.size(), us.empty() ? 0.0 : 1.0 / static_cast<double>(us.size()));
  e.unitaries = std::move(us);
  return e;
}

namespace {

// Per row i: w_i sum_j w_j |tr(U_i^dagger U_j)|^{2k} and the j = i term alone.
struct FrameRows {
  std::vector<double> total;
  std::vector<double> diagonal;
};

FrameRows frame_rows(const Ensemble& e, int k, Exec exec) {
  if (k < 1) throw std::invalid_argument("frame potential order must be positive");
  const int64_t s = static_cast<int64_t>(e.unitaries.size());
  if (s == 0) throw std::invalid_argument("empty ensemble");
  const Eigen::Index len = e.unitaries[0].size();
  // Column j holds U_j flattened; tr(U_i^dagger U_j) is a column inner product.
  Eigen::MatrixXcd flat(len, s);
  for (int64_t j = 0; j < s; ++j) {
    flat.col(j) = Eigen::Map<const Eigen::VectorXcd>(e.unitaries[j].data(), len);
  }
  FrameRows out{std::vector<double>(s, 0.0), std::vector<double>(s, 0.0)};
  auto row = [&](int64_t i) {
    double acc = 0;
    for (int64_t j = 0; j < s; ++j) {
      const double a = std::pow(std::norm(flat.col(i).dot(flat.col(j))), k);
      acc += e.weights[j] * a;
      if (j == i) out.diagonal[i] = e.weights[i] * e.weights[i] * a;
    }
    out.total[i] = e.weights[i] * acc;
  };
  if (exec == Exec::kSerial) {
    for (int64_t i = 0; i < s; ++i) row(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (int64_t i = 0; i < s; ++i) row(i);
  }
  return out;
}

}  // namespace

double frame_potential(const Ensemble& e, int k, Exec exec) {
  const FrameRows rows = frame_rows(e, k, exec);
  double total = 0;
  for (double r : rows.total) total += r;
  return total;
}

FrameEstimate frame_potential_estimate(const Ensemble& e, int k, Exec exec) {
  const int64_t s = static_cast<int64_t>(e.unitaries.size());
  if (s < 2) throw std::invalid_argument("frame potential estimate needs two samples");
  const FrameRows rows = frame_rows(e, k, exec);
  FrameEstimate est;
  est.samples = s;
  // With uniform weights 1/S, row i off the diagonal is (1/S^2) sum_{j != i}.
  std::vector<double> means(s);
  for (int64_t i = 0; i < s; ++i) {
    est.value += rows.total[i];
    means[i] = (rows.total[i] - rows.diagonal[i]) * static_cast<double>(s) * s / (s - 1);
  }
  double mean = 0;
  for (double v : means) mean += v;
  mean /= static_cast<double>(s);
  double var = 0;
  for (double v : means) var += (v - mean) * (v - mean);
  var /= static_cast<double>(s - 1);
  est.off_diagonal = mean;
  est.std_error = 2.0 * std::sqrt(var / static_cast<double>(s));
  return est;
}

Eigen::MatrixXcd sample_unitary(const FieldContext& ctx, const DesignSample& s) {
  const int m = ctx.degree();
  check_qubits(m);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1 << m, 1 << m);
  for (const Transvection& h : s.transvections) u = transvection_unitary(ctx, h) * u;
  return pauli_unitary(ctx, s.pauli) * psl_unitary(ctx, s.psl) * u;
}

Ensemble ensemble_from_samples(const FieldContext& ctx, const std::vector<DesignSample>& samples,
                               Exec exec) {
  std::vector<Eigen::MatrixXcd> us(samples.size());
  const int64_t n = static_cast<int64_t>(samples.size());
  if (exec == Exec::kSerial) {
    for (int64_t i = 0; i < n; ++i) us[i] = sample_unitary(ctx, samples[i]);
  } else {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) us[i] = sample_unitary(ctx, samples[i]);
  }
  return Ensemble::uniform(std::move(us));
}

Ensemble kerdock_ensemble(const FieldContext& ctx) {
  std::vector<Eigen::MatrixXcd> us;
  const uint32_t n2 = ctx.size() * ctx.size();
  for (const PslElement& g : enumerate_psl(ctx)) {
    const Eigen::MatrixXcd u = psl_unitary(ctx, g);
    for (uint32_t x = 0; x < n2; ++x) us.push_back(pauli_matrix(ctx.degree(), x) * u);
  }
  return Ensemble::uniform(std::move(us));
}

Ensemble clifford_group(int m) {
  if (m < 1 || m > 2) throw std::invalid_argument("Clifford group enumeration needs m <= 2");
  const int dim = 1 << m;
  std::vector<Eigen::MatrixXcd> gens;
  for (int q = 0; q < m; ++q) {
    gens.push_back(hadamard_on(m, 1u << q));
    BitMatrix p(m, m);
    p.set(q, q, true);
    gens.push_back(phase_diag(m, p));
    for (int r = 0; r < m; ++r) {
      if (r == q) continue;
      // CNOT with control q and target r: v -> v + v_q e_r.
      BitMatrix c = BitMatrix::identity(m);
      c.set(q, r, true);
      gens.push_back(permutation(m, c));
    }
  }
  std::set<std::vector<int64_t>> seen;
  std::vector<Eigen::MatrixXcd> group;
  std::deque<Eigen::MatrixXcd> queue;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  seen.insert(phase_key(id));
  queue.push_back(id);
  while (!queue.empty()) {
    Eigen::MatrixXcd u = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Eigen::MatrixXcd v = g * u;
      if (seen.insert(phase_key(v)).second) queue.push_back(v);
    }
    group.push_back(std::move(u));
  }
  return Ensemble::uniform(std::move(group));
}

}  // namespace tvd
