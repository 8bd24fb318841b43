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

#include "tvd/pauli_graph.h"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tvd/io.h"

namespace tvd {

namespace {

PauliIndex vertex(const FieldContext& ctx, uint32_t v) {
  return {FieldElement(v & ctx.mask()), FieldElement(v >> ctx.degree())};
}

uint32_t vertex_id(const FieldContext& ctx, PauliIndex p) {
  return p.a.coeffs | (p.b.coeffs << ctx.degree());
}

// Invariant of a pair already known to be valid.
OrbitInvariant invariant_unchecked(const FieldContext& ctx, const PauliPair& pr) {
  const FieldElement det = ctx.mul(pr.first.a, pr.second.b) + ctx.mul(pr.first.b, pr.second.a);
  if (ctx.trace(det)) return {EdgeKind::kNonEdge, det};
  if (!det.is_zero()) return {EdgeKind::kType2, det};
  const FieldElement ratio = pr.second.a.is_zero() ? ctx.div(pr.first.b, pr.second.b)
                                                   : ctx.div(pr.first.a, pr.second.a);
  return {EdgeKind::kType1, ratio};
}

void check_pair(const PauliPair& pr) {
  if (pr.first.is_identity() || pr.second.is_identity()) {
    throw std::invalid_argument("Pauli pair contains the identity");
  }
  if (pr.first == pr.second) throw std::invalid_argument("Pauli pair repeats a vertex");
}

struct Tally {
  explicit Tally(uint32_t n) : hist(3 * static_cast<size_t>(n), 0) {}
  std::vector<int64_t> hist;  // [kind][value]
  int64_t min_deg = INT64_MAX;
  int64_t max_deg = 0;
};

void tally_vertex(const FieldContext& ctx, uint32_t i, Tally& t) {
  const uint32_t nv = ctx.size() * ctx.size();
  const PauliPair base{vertex(ctx, i), {}};
  int64_t deg = 0;
  for (uint32_t j = 1; j < nv; ++j) {
    if (j == i) continue;
    PauliPair pr = base;
    pr.second = vertex(ctx, j);
    const OrbitInvariant inv = invariant_unchecked(ctx, pr);
    if (inv.kind != EdgeKind::kNonEdge) ++deg;
    ++t.hist[static_cast<size_t>(inv.kind) * ctx.size() + inv.value.coeffs];
  }
  t.min_deg = std::min(t.min_deg, deg);
  t.max_deg = std::max(t.max_deg, deg);
}

void merge(Tally& into, const Tally& from) {
  for (size_t k = 0; k < into.hist.size(); ++k) into.hist[k] += from.hist[k];
  into.min_deg = std::min(into.min_deg, from.min_deg);
  into.max_deg = std::max(into.max_deg, from.max_deg);
}

}  // namespace

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kNonEdge:
      return "non-edge";
    case EdgeKind::kType1:
      return "type1";
    case EdgeKind::kType2:
      return "type2";
  }
  return "?";
}

EdgeKind classify_pair(const FieldContext& ctx, const PauliPair& pair) {
  return orbit_invariant(ctx, pair).kind;
}

OrbitInvariant orbit_invariant(const FieldContext& ctx, const PauliPair& pair) {
  check_pair(pair);
  return invariant_unchecked(ctx, pair);
}

PauliPair act(const FieldContext& ctx, const PslElement& g, const PauliPair& pair) {
  const PslElement sq = frobenius(ctx, g);
  return {apply_psl(ctx, sq, pair.first), apply_psl(ctx, sq, pair.second)};
}

PauliPair act(const FieldContext& ctx, const Transvection& h, const PauliPair& pair) {
  return {apply_transvection(ctx, h, pair.first), apply_transvection(ctx, h, pair.second)};
}

SrgParameters srg_parameters(int m) {
  if (m < 1) throw std::invalid_argument("srg_parameters requires m >= 1");
  const int64_t n2 = int64_t{1} << (2 * m);
  return {n2 - 1, n2 / 2 - 2, n2 / 4 - 3, n2 / 4 - 1};
}

SrgParameters srg_parameters_bruteforce(const FieldContext& ctx) {
  const int m = ctx.degree();
  const uint32_t nv = ctx.size() * ctx.size();
  // Adjacency on binary words; commutation is the symplectic form.
  std::vector<std::vector<uint8_t>> adj(nv, std::vector<uint8_t>(nv, 0));
  for (uint32_t x = 1; x < nv; ++x) {
    for (uint32_t y = 1; y < nv; ++y) {
      adj[x][y] = (x != y && symplectic_form(m, x, y) == 0) ? 1 : 0;
    }
  }
  int64_t degree = -1;
  int64_t lambda = -1;
  int64_t mu = -1;
  auto agree = [](int64_t& slot, int64_t value, const char* what) {
    if (slot >= 0 && slot != value) {
      throw std::runtime_error(std::string("graph is not strongly regular: ") + what +
                               " varies");
    }
    slot = value;
  };
  for (uint32_t x = 1; x < nv; ++x) {
    agree(degree, std::count(adj[x].begin(), adj[x].end(), 1), "degree");
    for (uint32_t y = 1; y < nv; ++y) {
      if (x == y) continue;
      int64_t common = 0;
      for (uint32_t z = 1; z < nv; ++z) common += adj[x][z] & adj[y][z];
      agree(adj[x][y] ? lambda : mu, common, adj[x][y] ? "lambda" : "mu");
    }
  }
  return {static_cast<int64_t>(nv) - 1, degree, lambda, mu};
}

Census closed_form_census(int m) {
  const int64_t n = int64_t{1} << m;
  const int64_t v = n * n - 1;
  Census c;
  c.m = m;
  c.vertices = v;
  c.ordered_pairs = v * (v - 1);
  c.edges = v * (n * n - 4) / 2;
  c.type1 = v * (n - 2);
  c.type2 = n * v * (n - 2) / 2;
  c.non_edges = c.ordered_pairs - c.edges;
  c.min_out_degree = c.max_out_degree = n * n / 2 - 2;
  return c;
}

Census census(const FieldContext& ctx, Exec exec) {
  const int m = ctx.degree();
  if (m > kCensusMaxDegree) return closed_form_census(m);
  const uint32_t n = ctx.size();
  const uint32_t nv = n * n;
  Tally total(n);
  if (exec == Exec::kSerial) {
    for (uint32_t i = 1; i < nv; ++i) tally_vertex(ctx, i, total);
  } else {
#pragma omp parallel
    {
      Tally local(n);
#pragma omp for schedule(dynamic, 16)
      for (int64_t i = 1; i < static_cast<int64_t>(nv); ++i) {
        tally_vertex(ctx, static_cast<uint32_t>(i), local);
      }
#pragma omp critical(tvd_census_merge)
      merge(total, local);
    }
  }

  Census c;
  c.m = m;
  c.exhaustive = true;
  c.vertices = nv - 1;
  c.min_out_degree = total.min_deg;
  c.max_out_degree = total.max_deg;
  for (int k = 0; k < 3; ++k) {
    for (uint32_t v = 0; v < n; ++v) {
      const int64_t count = total.hist[static_cast<size_t>(k) * n + v];
      if (count == 0) continue;
      const OrbitInvariant inv{static_cast<EdgeKind>(k), FieldElement(v)};
      c.per_invariant[inv] = count;
      c.ordered_pairs += count;
      if (inv.kind == EdgeKind::kNonEdge) {
        c.non_edges += count;
      } else {
        c.edges += count;
        (inv.kind == EdgeKind::kType1 ? c.type1 : c.type2) += count;
      }
    }
  }
  return c;
}

std::string format_census(const Census& c, const FieldContext* ctx) {
  std::ostringstream os;
  const SrgParameters srg = srg_parameters(c.m);
  os << "m " << c.m << "\n";
  os << "mode " << (c.exhaustive ? "exhaustive" : "closed-form") << "\n";
  os << "srg " << srg.n << " " << srg.t << " " << srg.lambda << " " << srg.mu << "\n";
  os << "vertices " << c.vertices << "\n";
  os << "ordered_pairs " << c.ordered_pairs << "\n";
  os << "edges " << c.edges << "\n";
  os << "type1 " << c.type1 << "\n";
  os << "type2 " << c.type2 << "\n";
  os << "non_edges " << c.non_edges << "\n";
  os << "out_degree " << c.min_out_degree << " " << c.max_out_degree << "\n";
  for (const auto& [inv, count] : c.per_invariant) {
    os << "orbit " << to_string(inv.kind) << " " << hex(inv.value.coeffs);
    if (ctx && !inv.value.is_zero()) os << " alpha^" << ctx->log(inv.value);
    os << " " << count << "\n";
  }
  return os.str();
}

OrbitPartition orbit_partition(const FieldContext& ctx) {
  const uint32_t nv = ctx.size() * ctx.size();
  OrbitPartition out;
  std::vector<int> index(static_cast<size_t>(nv) * nv, -1);
  for (uint32_t i = 1; i < nv; ++i) {
    for (uint32_t j = 1; j < nv; ++j) {
      if (i == j) continue;
      index[static_cast<size_t>(i) * nv + j] = static_cast<int>(out.pairs.size());
      out.pairs.push_back({vertex(ctx, i), vertex(ctx, j)});
    }
  }
  std::vector<int> parent(out.pairs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const PslElement& g : psl_generators(ctx)) {
    const PslElement sq = frobenius(ctx, g);
    for (size_t k = 0; k < out.pairs.size(); ++k) {
      const PauliPair& p = out.pairs[k];
      const uint32_t i = vertex_id(ctx, apply_psl(ctx, sq, p.first));
      const uint32_t j = vertex_id(ctx, apply_psl(ctx, sq, p.second));
      const int a = find(static_cast<int>(k));
      const int b = find(index[static_cast<size_t>(i) * nv + j]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  out.orbit_of.resize(out.pairs.size());
  std::vector<int> root_to_orbit(out.pairs.size(), -1);
  for (size_t k = 0; k < out.pairs.size(); ++k) {
    const int r = find(static_cast<int>(k));
    if (root_to_orbit[r] < 0) {
      root_to_orbit[r] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[k] = root_to_orbit[r];
    out.orbits[root_to_orbit[r]].push_back(static_cast<int>(k));
  }
  return out;
}

}  // namespace tvd
