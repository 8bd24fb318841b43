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

#include "tvd/orbit_markov.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tvd/io.h"

namespace tvd {

namespace {

int64_t field_size(int m) { return int64_t{1} << m; }

int state_index(const std::map<OrbitInvariant, int>& lookup, const OrbitInvariant& inv) {
  auto it = lookup.find(inv);
  if (it == lookup.end()) {
    throw std::logic_error(std::string("transvection left the chain's state space at a ") +
                           to_string(inv.kind) + " pair");
  }
  return it->second;
}

std::map<OrbitInvariant, int> index_states(const std::vector<OrbitInvariant>& states) {
  std::map<OrbitInvariant, int> lookup;
  for (size_t i = 0; i < states.size(); ++i) lookup[states[i]] = static_cast<int>(i);
  return lookup;
}

EdgeKind kind_from_string(const std::string& s) {
  if (s == "non-edge") return EdgeKind::kNonEdge;
  if (s == "type1") return EdgeKind::kType1;
  if (s == "type2") return EdgeKind::kType2;
  throw std::invalid_argument("unknown edge kind '" + s + "'");
}

}  // namespace

const char* to_string(ChainKind kind) { return kind == ChainKind::kEdges ? "edges" : "nonedges"; }

Eigen::MatrixXd TransitionMatrix::to_double() const {
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = static_cast<double>(at(i, j)) / static_cast<double>(den);
  }
  return out;
}

bool TransitionMatrix::is_stochastic() const {
  for (int i = 0; i < n; ++i) {
    int64_t sum = 0;
    for (int j = 0; j < n; ++j) {
      if (at(i, j) < 0) return false;
      sum += at(i, j);
    }
    if (sum != den) return false;
  }
  return true;
}

TransitionMatrix TransitionMatrix::scaled(int64_t k) const {
  TransitionMatrix out = *this;
  out.den *= k;
  for (int64_t& x : out.num) x *= k;
  return out;
}

int type1_orbit_count(int m) { return static_cast<int>(field_size(m) - 2); }
int type2_orbit_count(int m) { return static_cast<int>((field_size(m) - 2) / 2); }

std::vector<OrbitInvariant> orbit_states(const FieldContext& ctx, ChainKind kind) {
  const int order = static_cast<int>(ctx.size()) - 1;
  std::vector<OrbitInvariant> out;
  if (kind == ChainKind::kEdges) {
    for (int i = 1; i < order; ++i) out.push_back({EdgeKind::kType1, ctx.exp(i)});
    for (int i = 0; i < order; ++i) {
      if (ctx.trace(ctx.exp(i)) == 0) out.push_back({EdgeKind::kType2, ctx.exp(i)});
    }
  } else {
    for (int i = 0; i < order; ++i) {
      if (ctx.trace(ctx.exp(i)) == 1) out.push_back({EdgeKind::kNonEdge, ctx.exp(i)});
    }
  }
  return out;
}

PauliPair representative(const FieldContext& ctx, const OrbitInvariant& inv) {
  if (inv.kind == EdgeKind::kType1) {
    return {{inv.value, ctx.zero()}, {ctx.one(), ctx.zero()}};
  }
  return {{inv.value, ctx.zero()}, {ctx.zero(), ctx.one()}};
}

std::vector<int64_t> transvection_row(const FieldContext& ctx, const PauliPair& pair,
                                      const std::vector<OrbitInvariant>& states) {
  const auto lookup = index_states(states);
  std::vector<int64_t> row(states.size(), 0);
  const uint32_t n2 = ctx.size() * ctx.size();
  for (uint32_t h = 1; h < n2; ++h) {
    const PauliIndex v = from_binary(ctx, h);
    const PauliPair image = act(ctx, Transvection{v.a, v.b}, pair);
    ++row[state_index(lookup, orbit_invariant(ctx, image))];
  }
  return row;
}

TransitionMatrix transvection_counts(const FieldContext& ctx, ChainKind kind, Exec exec) {
  TransitionMatrix q;
  q.states = orbit_states(ctx, kind);
  q.n = static_cast<int>(q.states.size());
  q.den = int64_t{ctx.size()} * ctx.size() - 1;
  q.num.assign(static_cast<size_t>(q.n) * q.n, 0);
  auto fill = [&](int i) {
    const auto row = transvection_row(ctx, representative(ctx, q.states[i]), q.states);
    std::copy(row.begin(), row.end(), q.num.begin() + static_cast<ptrdiff_t>(i) * q.n);
  };
  if (exec == Exec::kSerial) {
    for (int i = 0; i < q.n; ++i) fill(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < q.n; ++i) fill(i);
  }
  return q;
}

TransitionMatrix q_empirical(const FieldContext& ctx, ChainKind kind, Exec exec) {
  return transvection_counts(ctx, kind, exec).scaled(4);
}

TransitionMatrix q1_closed_form(int m) {
  const FieldContext ctx(m);
  const int64_t n = field_size(m);
  TransitionMatrix q;
  q.states = orbit_states(ctx, ChainKind::kNonEdges);
  q.n = static_cast<int>(n / 2);
  q.den = 4 * (n * n - 1);
  q.num.assign(static_cast<size_t>(q.n) * q.n, 6 * n);
  for (int i = 0; i < q.n; ++i) q.at(i, i) += n * n - 4;
  return q;
}

StructureReport q0_structure_check(int m, const TransitionMatrix& q0) {
  StructureReport rep;
  const int64_t n = field_size(m);
  const int m1 = type1_orbit_count(m);
  const int m2 = type2_orbit_count(m);
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  if (q0.n != m1 + m2 || q0.den != 4 * (n * n - 1)) {
    fail("expected " + std::to_string(m1 + m2) + " states over denominator " +
         std::to_string(4 * (n * n - 1)) + ", got " + std::to_string(q0.n) + " over " +
         std::to_string(q0.den));
    return rep;
  }
  if (!q0.is_stochastic()) fail("rows are not stochastic");

  rep.r.assign(m2, std::vector<int64_t>(m1, 0));
  for (int i = 0; i < m2; ++i) {
    for (int j = 0; j < m1; ++j) rep.r[i][j] = q0.at(m1 + i, j);
  }
  auto entry = [](const char* block, int i, int j, int64_t got, int64_t want) {
    return std::string(block) + "(" + std::to_string(i) + "," + std::to_string(j) +
           ") = " + std::to_string(got) + ", expected " + std::to_string(want);
  };
  for (int i = 0; i < m1; ++i) {
    for (int j = 0; j < m1; ++j) {
      const int64_t want = (i == j) ? n * n - 4 : 0;
      if (q0.at(i, j) != want) fail(entry("upper-left", i, j, q0.at(i, j), want));
    }
    for (int j = 0; j < m2; ++j) {
      const int64_t want = n * rep.r[j][i];
      if (q0.at(i, m1 + j) != want) fail(entry("upper-right", i, j, q0.at(i, m1 + j), want));
    }
  }
  for (int i = 0; i < m2; ++i) {
    for (int j = 0; j < m2; ++j) {
      const int64_t want = 6 * n + ((i == j) ? n * n - 4 : 0);
      if (q0.at(m1 + i, m1 + j) != want) {
        fail(entry("lower-right", i, j, q0.at(m1 + i, m1 + j), want));
      }
    }
  }
  for (int i = 0; i < m2; ++i) {
    int64_t sum = 0;
    for (int j = 0; j < m1; ++j) sum += rep.r[i][j];
    if (sum != 6 * n) fail(entry("R row sum", i, 0, sum, 6 * n));
  }
  for (int j = 0; j < m1; ++j) {
    int64_t sum = 0;
    for (int i = 0; i < m2; ++i) sum += rep.r[i][j];
    if (sum != 3 * n) fail(entry("R column sum", 0, j, sum, 3 * n));
  }
  return rep;
}

bool is_left_eigenvector(const TransitionMatrix& q, const std::vector<int64_t>& w,
                         int64_t lam_num, int64_t lam_den) {
  if (static_cast<int>(w.size()) != q.n) return false;
  for (int j = 0; j < q.n; ++j) {
    int64_t lhs = 0;
    for (int i = 0; i < q.n; ++i) lhs += w[i] * q.at(i, j);
    if (lhs * lam_den != lam_num * q.den * w[j]) return false;
  }
  return true;
}

std::vector<double> stationary_distribution(const TransitionMatrix& q) {
  const Eigen::MatrixXd p = q.to_double();
  // Solve pi (P - I) = 0 with the last equation replaced by sum(pi) = 1.
  Eigen::MatrixXd a = p.transpose() - Eigen::MatrixXd::Identity(q.n, q.n);
  a.row(q.n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(q.n);
  b(q.n - 1) = 1.0;
  const Eigen::VectorXd pi = a.fullPivLu().solve(b);
  return std::vector<double>(pi.data(), pi.data() + pi.size());
}

SpectralReport spectral_report(const TransitionMatrix& q) {
  SpectralReport rep;
  const Eigen::MatrixXd p = q.to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(p, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver did not converge on a " + std::to_string(q.n) +
                             "-state chain");
  }
  const Eigen::VectorXcd ev = solver.eigenvalues();
  rep.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              if (x.real() != y.real()) return x.real() > y.real();
              return x.imag() > y.imag();
            });
  for (const auto& z : rep.eigenvalues) rep.max_imag = std::max(rep.max_imag, std::abs(z.imag()));
  rep.lambda2 = q.n > 1 ? rep.eigenvalues[1].real() : 0.0;
  rep.lambda_min = rep.eigenvalues.back().real();
  rep.gap = std::min(1.0 - rep.lambda2, 1.0 + rep.lambda_min);
  rep.stationary = stationary_distribution(q);
  const Eigen::Map<const Eigen::RowVectorXd> pi(rep.stationary.data(), q.n);
  rep.stationary_residual = (pi * p - pi).cwiseAbs().maxCoeff();
  return rep;
}

SingularReport singular_check_R(const std::vector<std::vector<int64_t>>& r, int m, double tol) {
  SingularReport rep;
  rep.bound = 3.0 * std::sqrt(2.0) * static_cast<double>(field_size(m));
  if (r.empty() || r[0].empty()) return rep;
  Eigen::MatrixXd a(r.size(), r[0].size());
  for (size_t i = 0; i < r.size(); ++i) {
    for (size_t j = 0; j < r[i].size(); ++j) a(i, j) = static_cast<double>(r[i][j]);
  }
  rep.sigma_max = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
  rep.within = rep.sigma_max <= rep.bound + tol;
  rep.equality = std::abs(rep.sigma_max - rep.bound) <= tol;
  return rep;
}

double lambda_q0_upper(int m) {
  const double n = static_cast<double>(field_size(m));
  return (n * n - 4 + 3 * n * std::sqrt(2 * n)) / (4 * (n * n - 1));
}

double lambda_q0_lower(int m) {
  const double n = static_cast<double>(field_size(m));
  return (n * n - 4 - 3 * n * std::sqrt(2 * n)) / (4 * (n * n - 1));
}

MixingReport mixing_report(int m, double eps, const SpectralReport* numeric) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (m < 2) throw std::invalid_argument("mixing bound requires m >= 2");
  const double n = static_cast<double>(field_size(m));
  MixingReport rep;
  rep.m = m;
  rep.eps = eps;
  rep.lambda_upper = lambda_q0_upper(m);
  rep.lambda_lower = lambda_q0_lower(m);
  rep.gap = std::min(1 - rep.lambda_upper, 1 + rep.lambda_lower);
  rep.pi_star = 2 / (n * n - 4);
  rep.log_term = std::log(n * n * n / (eps * rep.pi_star));
  rep.bound = static_cast<int64_t>(std::ceil(rep.log_term / rep.gap));
  rep.large_n_approximation = static_cast<int64_t>(std::ceil(rep.log_term * 4.0 / 3.0));
  if (numeric) {
    rep.numeric_gap = numeric->gap;
    rep.numeric_bound = static_cast<int64_t>(std::ceil(rep.log_term / numeric->gap));
  }
  return rep;
}

int64_t mixing_time_bound(int m, double eps) { return mixing_report(m, eps).bound; }

std::vector<double> tv_curve(const TransitionMatrix& q, const std::vector<double>& start,
                             int t_max, const std::vector<double>& pi) {
  if (static_cast<int>(start.size()) != q.n || static_cast<int>(pi.size()) != q.n) {
    throw std::invalid_argument("distribution length does not match the chain");
  }
  const Eigen::MatrixXd p = q.to_double();
  Eigen::RowVectorXd s = Eigen::Map<const Eigen::RowVectorXd>(start.data(), q.n);
  const Eigen::Map<const Eigen::RowVectorXd> target(pi.data(), q.n);
  std::vector<double> out;
  out.reserve(t_max + 1);
  for (int t = 0; t <= t_max; ++t) {
    out.push_back(0.5 * (s - target).cwiseAbs().sum());
    s = s * p;
  }
  return out;
}

FullChain full_chain(const FieldContext& ctx, ChainKind kind, Exec exec) {
  if (ctx.degree() > kFullChainMaxDegree) {
    throw std::invalid_argument("full chain is limited to m <= " +
                                std::to_string(kFullChainMaxDegree));
  }
  const int m = ctx.degree();
  const uint32_t n2 = ctx.size() * ctx.size();
  FullChain chain;
  chain.kind = kind;
  chain.den = n2 - 1;
  // Pairs are held as binary words; commutation decides membership.
  std::vector<std::pair<uint32_t, uint32_t>> words;
  std::vector<int> index(static_cast<size_t>(n2) * n2, -1);
  for (uint32_t x = 1; x < n2; ++x) {
    for (uint32_t y = 1; y < n2; ++y) {
      if (x == y) continue;
      const bool commute = symplectic_form(m, x, y) == 0;
      if (commute != (kind == ChainKind::kEdges)) continue;
      index[static_cast<size_t>(x) * n2 + y] = static_cast<int>(words.size());
      words.emplace_back(x, y);
      chain.states.push_back({from_binary(ctx, x), from_binary(ctx, y)});
    }
  }
  chain.rows.resize(words.size());
  auto fill = [&](int s) {
    std::map<int, int64_t> row;
    const auto [x, y] = words[s];
    for (uint32_t h = 1; h < n2; ++h) {
      ++row[index[static_cast<size_t>(transvect(m, h, x)) * n2 + transvect(m, h, y)]];
    }
    chain.rows[s].assign(row.begin(), row.end());
  };
  const int ns = static_cast<int>(words.size());
  if (exec == Exec::kSerial) {
    for (int s = 0; s < ns; ++s) fill(s);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (int s = 0; s < ns; ++s) fill(s);
  }
  return chain;
}

bool uniform_is_stationary(const FullChain& chain) {
  std::vector<int64_t> col(chain.states.size(), 0);
  for (const auto& row : chain.rows) {
    for (const auto& [j, c] : row) col[j] += c;
  }
  return std::all_of(col.begin(), col.end(), [&](int64_t c) { return c == chain.den; });
}

TransitionMatrix lump(const FieldContext& ctx, const FullChain& chain,
                      const std::vector<OrbitInvariant>& states) {
  const auto lookup = index_states(states);
  TransitionMatrix q;
  q.states = states;
  q.n = static_cast<int>(states.size());
  q.den = chain.den;
  q.num.assign(static_cast<size_t>(q.n) * q.n, 0);
  std::vector<int> orbit(chain.states.size());
  for (size_t s = 0; s < chain.states.size(); ++s) {
    orbit[s] = state_index(lookup, orbit_invariant(ctx, chain.states[s]));
  }
  std::vector<bool> seen(q.n, false);
  for (size_t s = 0; s < chain.states.size(); ++s) {
    std::vector<int64_t> agg(q.n, 0);
    for (const auto& [j, c] : chain.rows[s]) agg[orbit[j]] += c;
    const int o = orbit[s];
    auto dst = q.num.begin() + static_cast<ptrdiff_t>(o) * q.n;
    if (!seen[o]) {
      std::copy(agg.begin(), agg.end(), dst);
      seen[o] = true;
    } else if (!std::equal(agg.begin(), agg.end(), dst)) {
      throw std::runtime_error("chain is not lumpable: orbit " + std::to_string(o) +
                               " has pairs with different aggregated rows");
    }
  }
  return q;
}

std::string to_json(const TransitionMatrix& q, int indent) {
  nlohmann::json j;
  j["n"] = q.n;
  j["den"] = q.den;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < q.n; ++i) {
    rows.push_back(std::vector<int64_t>(q.num.begin() + static_cast<ptrdiff_t>(i) * q.n,
                                        q.num.begin() + static_cast<ptrdiff_t>(i + 1) * q.n));
  }
  j["num"] = rows;
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : q.states) {
    states.push_back({{"kind", to_string(s.kind)}, {"value", hex(s.value.coeffs)}});
  }
  j["states"] = states;
  return j.dump(indent);
}

TransitionMatrix transition_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  TransitionMatrix q;
  q.n = j.at("n").get<int>();
  q.den = j.at("den").get<int64_t>();
  for (const auto& row : j.at("num")) {
    if (static_cast<int>(row.size()) != q.n) throw std::invalid_argument("ragged matrix row");
    for (const auto& x : row) q.num.push_back(x.get<int64_t>());
  }
  if (static_cast<int>(q.num.size()) != q.n * q.n) throw std::invalid_argument("wrong row count");
  if (j.contains("states")) {
    for (const auto& s : j.at("states")) {
      q.states.push_back({kind_from_string(s.at("kind").get<std::string>()),
                          FieldElement(parse_hex(s.at("value").get<std::string>()))});
    }
  }
  return q;
}

std::string to_csv(const Eigen::MatrixXd& q) {
  std::string out;
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      if (j) out += ',';
      out += format_double(q(i, j));
    }
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw std::invalid_argument("ragged CSV matrix");
    }
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd out(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) out(i, j) = rows[i][j];
  }
  return out;
}

}  // namespace tvd
