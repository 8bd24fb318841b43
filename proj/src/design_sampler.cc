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

#include "tvd/design_sampler.h"

#include <omp.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tvd/io.h"
#include "tvd/orbit_markov.h"

namespace tvd {

namespace {

// The random part of a sample, with transvections as binary words.
struct Draw {
  std::vector<uint32_t> h;
  PslElement psl = PslElement::identity();
  PauliIndex pauli;
};

Draw draw(const FieldContext& ctx, const SamplerConfig& config, int64_t steps, Rng& rng) {
  Draw d;
  const uint64_t n2 = uint64_t{ctx.size()} * ctx.size();
  d.h.reserve(steps);
  for (int64_t i = 0; i < steps; ++i) {
    d.h.push_back(static_cast<uint32_t>(1 + uniform_below(rng, n2 - 1)));
  }
  d.psl = config.fixed_psl ? *config.fixed_psl : sample_psl(ctx, rng);
  if (config.sample_pauli) d.pauli = from_binary(ctx, static_cast<uint32_t>(uniform_below(rng, n2)));
  return d;
}

DesignSample assemble(const FieldContext& ctx, Draw d, int64_t index) {
  DesignSample s;
  s.index = index;
  s.psl = d.psl;
  s.pauli = d.pauli;
  SymplecticMatrix composed = SymplecticMatrix::identity(ctx.degree());
  for (uint32_t h : d.h) {
    const PauliIndex p = from_binary(ctx, h);
    s.transvections.push_back({p.a, p.b});
    composed = composed * transvection_matrix(ctx.degree(), h);
  }
  s.composed = composed * psl_to_symplectic(ctx, d.psl);
  return s;
}

uint32_t apply_draw(const FieldContext& ctx, const Draw& d, const PslElement& sq, uint32_t x) {
  const int m = ctx.degree();
  for (uint32_t h : d.h) x = transvect(m, h, x);
  return to_binary(ctx, apply_psl(ctx, sq, from_binary(ctx, x)));
}

struct Histograms {
  std::vector<std::vector<int64_t>> vertex;
  std::vector<std::vector<int64_t>> pair;
};

Histograms empty_histograms(const FieldContext& ctx, size_t nv, size_t np) {
  const size_t n2 = size_t{ctx.size()} * ctx.size();
  return {std::vector<std::vector<int64_t>>(nv, std::vector<int64_t>(n2, 0)),
          std::vector<std::vector<int64_t>>(np, std::vector<int64_t>(n2 * n2, 0))};
}

void merge(Histograms& into, const Histograms& from) {
  for (size_t k = 0; k < into.vertex.size(); ++k) {
    for (size_t i = 0; i < into.vertex[k].size(); ++i) into.vertex[k][i] += from.vertex[k][i];
  }
  for (size_t k = 0; k < into.pair.size(); ++k) {
    for (size_t i = 0; i < into.pair[k].size(); ++i) into.pair[k][i] += from.pair[k][i];
  }
}

PairStatistics finish(const FieldContext& ctx, int64_t samples, Histograms hist,
                      const std::vector<PauliIndex>& vertex_probes,
                      const std::vector<PauliPair>& pair_probes) {
  const int m = ctx.degree();
  const uint32_t n2 = ctx.size() * ctx.size();
  const double s = static_cast<double>(samples);
  PairStatistics out;
  out.samples = samples;
  for (size_t k = 0; k < vertex_probes.size(); ++k) {
    VertexStatistic v;
    v.probe = vertex_probes[k];
    v.histogram = std::move(hist.vertex[k]);
    const double p = 1.0 / (n2 - 1);
    for (uint32_t x = 1; x < n2; ++x) v.tv += std::abs(v.histogram[x] / s - p);
    v.tv = 0.5 * (v.tv + v.histogram[0] / s);
    v.sigma = 0.5 * (n2 - 1) * std::sqrt(p * (1 - p) / s);
    out.vertices.push_back(std::move(v));
  }
  for (size_t k = 0; k < pair_probes.size(); ++k) {
    PairStatistic r;
    r.probe = pair_probes[k];
    const uint32_t x0 = to_binary(ctx, r.probe.first);
    const uint32_t y0 = to_binary(ctx, r.probe.second);
    r.commuting = symplectic_form(m, x0, y0) == 0;
    r.histogram = std::move(hist.pair[k]);
    const Census c = closed_form_census(m);
    r.class_size = r.commuting ? c.edges : c.non_edges;
    const double p = 1.0 / static_cast<double>(r.class_size);
    double tv = 0;
    for (uint32_t x = 0; x < n2; ++x) {
      for (uint32_t y = 0; y < n2; ++y) {
        const double f = r.histogram[static_cast<size_t>(x) * n2 + y] / s;
        const bool in_class =
            x != 0 && y != 0 && x != y && (symplectic_form(m, x, y) == 0) == r.commuting;
        tv += std::abs(f - (in_class ? p : 0.0));
      }
    }
    r.tv = 0.5 * tv;
    r.sigma = 0.5 * r.class_size * std::sqrt(p * (1 - p) / s);
    out.pairs.push_back(std::move(r));
  }
  return out;
}

}  // namespace

int64_t steps_for_epsilon(int m, double eps) { return mixing_time_bound(m, eps); }

int64_t resolve_steps(const SamplerConfig& config) {
  if (const auto* e = std::get_if<TargetEpsilon>(&config.steps)) {
    return steps_for_epsilon(config.m, e->eps);
  }
  const int64_t t = std::get<FixedSteps>(config.steps).t;
  if (t < 0) throw std::invalid_argument("step count must be non-negative");
  return t;
}

DesignSample sample(const FieldContext& ctx, const SamplerConfig& config, Rng& rng) {
  return assemble(ctx, draw(ctx, config, resolve_steps(config), rng), 0);
}

DesignSample sample_at(const FieldContext& ctx, const SamplerConfig& config, int64_t index) {
  Rng rng = substream(config.seed, static_cast<uint64_t>(index));
  return assemble(ctx, draw(ctx, config, resolve_steps(config), rng), index);
}

uint32_t apply_sample(const FieldContext& ctx, const DesignSample& s, uint32_t x) {
  for (const Transvection& h : s.transvections) {
    x = transvect(ctx.degree(), to_binary(ctx, as_pauli(h)), x);
  }
  return to_binary(ctx, apply_theta(ctx, s.psl, from_binary(ctx, x)));
}

bool SampleStream::next(DesignSample& out) {
  if (next_ >= config_.count) return false;
  out = sample_at(*ctx_, config_, next_++);
  return true;
}

std::vector<DesignSample> sample_batch(const FieldContext& ctx, const SamplerConfig& config,
                                       Exec exec) {
  std::vector<DesignSample> out(config.count);
  if (exec == Exec::kSerial) {
    for (int64_t i = 0; i < config.count; ++i) out[i] = sample_at(ctx, config, i);
  } else {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < config.count; ++i) out[i] = sample_at(ctx, config, i);
  }
  return out;
}

std::string to_json_line(const FieldContext& ctx, const DesignSample& s) {
  nlohmann::json j;
  j["index"] = s.index;
  nlohmann::json hs = nlohmann::json::array();
  for (const Transvection& h : s.transvections) hs.push_back({hex(h.h1.coeffs), hex(h.h2.coeffs)});
  j["transvections"] = hs;
  j["psl"] = {hex(s.psl.alpha.coeffs), hex(s.psl.beta.coeffs), hex(s.psl.gamma.coeffs),
              hex(s.psl.delta.coeffs)};
  j["pauli"] = {hex(s.pauli.a.coeffs), hex(s.pauli.b.coeffs)};
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 2 * ctx.degree(); ++r) rows.push_back(hex(s.composed.row(r)));
  j["composed"] = rows;
  return j.dump();
}

PairStatistics pair_statistics(const FieldContext& ctx, const std::vector<DesignSample>& samples,
                               const std::vector<PauliIndex>& vertex_probes,
                               const std::vector<PauliPair>& pair_probes) {
  const size_t n2 = size_t{ctx.size()} * ctx.size();
  Histograms hist = empty_histograms(ctx, vertex_probes.size(), pair_probes.size());
  for (const DesignSample& s : samples) {
    for (size_t k = 0; k < vertex_probes.size(); ++k) {
      ++hist.vertex[k][s.composed.apply(to_binary(ctx, vertex_probes[k]))];
    }
    for (size_t k = 0; k < pair_probes.size(); ++k) {
      const uint32_t x = s.composed.apply(to_binary(ctx, pair_probes[k].first));
      const uint32_t y = s.composed.apply(to_binary(ctx, pair_probes[k].second));
      ++hist.pair[k][x * n2 + y];
    }
  }
  return finish(ctx, static_cast<int64_t>(samples.size()), std::move(hist), vertex_probes,
                pair_probes);
}

PairStatistics pair_statistics(const FieldContext& ctx, const SamplerConfig& config,
                               const std::vector<PauliIndex>& vertex_probes,
                               const std::vector<PauliPair>& pair_probes, Exec exec) {
  const size_t n2 = size_t{ctx.size()} * ctx.size();
  const int64_t steps = resolve_steps(config);
  std::vector<uint32_t> vx;
  std::vector<std::pair<uint32_t, uint32_t>> px;
  for (const auto& v : vertex_probes) vx.push_back(to_binary(ctx, v));
  for (const auto& p : pair_probes) px.emplace_back(to_binary(ctx, p.first), to_binary(ctx, p.second));

  auto run = [&](int64_t i, Histograms& h) {
    Rng rng = substream(config.seed, static_cast<uint64_t>(i));
    const Draw d = draw(ctx, config, steps, rng);
    const PslElement sq = frobenius(ctx, d.psl);
    for (size_t k = 0; k < vx.size(); ++k) ++h.vertex[k][apply_draw(ctx, d, sq, vx[k])];
    for (size_t k = 0; k < px.size(); ++k) {
      const uint32_t x = apply_draw(ctx, d, sq, px[k].first);
      const uint32_t y = apply_draw(ctx, d, sq, px[k].second);
      ++h.pair[k][x * n2 + y];
    }
  };

  Histograms total = empty_histograms(ctx, vx.size(), px.size());
  if (exec == Exec::kSerial) {
    for (int64_t i = 0; i < config.count; ++i) run(i, total);
  } else {
#pragma omp parallel
    {
      Histograms local = empty_histograms(ctx, vx.size(), px.size());
#pragma omp for schedule(static)
      for (int64_t i = 0; i < config.count; ++i) run(i, local);
#pragma omp critical(tvd_pair_merge)
      merge(total, local);
    }
  }
  return finish(ctx, config.count, std::move(total), vertex_probes, pair_probes);
}

std::string statistics_csv(const FieldContext& ctx, const PairStatistics& stats) {
  std::ostringstream os;
  os << "kind,probe,class_size,samples,tv,sigma\n";
  for (const auto& v : stats.vertices) {
    os << "vertex," << hex(to_binary(ctx, v.probe)) << "," << (ctx.size() * ctx.size() - 1) << ","
       << stats.samples << "," << format_double(v.tv) << "," << format_double(v.sigma) << "\n";
  }
  for (const auto& p : stats.pairs) {
    os << (p.commuting ? "commuting" : "anticommuting") << ","
       << hex(to_binary(ctx, p.probe.first)) << ":" << hex(to_binary(ctx, p.probe.second)) << ","
       << p.class_size << "," << stats.samples << "," << format_double(p.tv) << ","
       << format_double(p.sigma) << "\n";
  }
  return os.str();
}

}  // namespace tvd
