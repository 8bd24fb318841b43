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

#ifndef TVD_DESIGN_SAMPLER_H
#define TVD_DESIGN_SAMPLER_H

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tvd/gf2m.h"
#include "tvd/kerdock_psl.h"
#include "tvd/parallel.h"
#include "tvd/pauli_graph.h"
#include "tvd/pauli_symplectic.h"
#include "tvd/random.h"

namespace tvd {

struct TargetEpsilon {
  double eps;
};
struct FixedSteps {
  int64_t t;
};

struct SamplerConfig {
  int m = 3;
  std::variant<TargetEpsilon, FixedSteps> steps = TargetEpsilon{0.01};
  uint64_t seed = 0;
  int64_t count = 1;
  /// Replaces the random PSL draw when set.
  std::optional<PslElement> fixed_psl;
  /// When false the Pauli factor is always the identity.
  bool sample_pauli = true;
};

/// Number of transvections for accuracy eps; equals mixing_time_bound(m, eps),
/// whose logarithm already carries the N^3 factor.
int64_t steps_for_epsilon(int m, double eps);

/// Steps implied by the config; validates eps and t.
int64_t resolve_steps(const SamplerConfig& config);

struct DesignSample {
  int64_t index = 0;
  std::vector<Transvection> transvections;
  PslElement psl = PslElement::identity();
  PauliIndex pauli;
  /// Z_{h_1} ... Z_{h_t} theta(psl).
  SymplecticMatrix composed = SymplecticMatrix::identity(1);
};

/// Draws t transvections, then the PSL element, then the Pauli, from `rng`.
DesignSample sample(const FieldContext& ctx, const SamplerConfig& config, Rng& rng);

/// Sample `index` of the stream, drawn from substream (seed, index).
DesignSample sample_at(const FieldContext& ctx, const SamplerConfig& config, int64_t index);

/// Symplectic action of the sample applied factor by factor.
uint32_t apply_sample(const FieldContext& ctx, const DesignSample& s, uint32_t x);

/// Sequential iterator over samples 0 .. count - 1.
class SampleStream {
 public:
  SampleStream(const FieldContext& ctx, SamplerConfig config)
      : ctx_(&ctx), config_(std::move(config)) {}
  bool next(DesignSample& out);

 private:
  const FieldContext* ctx_;
  SamplerConfig config_;
  int64_t next_ = 0;
};

/// All `count` samples; the parallel path produces the same vector.
std::vector<DesignSample> sample_batch(const FieldContext& ctx, const SamplerConfig& config,
                                       Exec exec = Exec::kParallel);

/// {"composed": [...], "index": i, "pauli": [a, b], "psl": [...], "transvections": [...]}.
std::string to_json_line(const FieldContext& ctx, const DesignSample& s);

struct VertexStatistic {
  PauliIndex probe;
  std::vector<int64_t> histogram;  // by binary word; entry 0 unused
  double tv = 0;
  double sigma = 0;
};

struct PairStatistic {
  PauliPair probe;
  bool commuting = false;
  int64_t class_size = 0;
  std::vector<int64_t> histogram;  // by x * N^2 + y on binary words
  double tv = 0;
  /// Half the summed binomial standard deviations of the cell frequencies.
  double sigma = 0;
};

struct PairStatistics {
  int64_t samples = 0;
  std::vector<VertexStatistic> vertices;
  std::vector<PairStatistic> pairs;
};

/// Image distributions of the probes under the samples' symplectic action.
PairStatistics pair_statistics(const FieldContext& ctx, const std::vector<DesignSample>& samples,
                               const std::vector<PauliIndex>& vertex_probes,
                               const std::vector<PauliPair>& pair_probes);

/// Same statistics over the config's stream without storing the samples.
PairStatistics pair_statistics(const FieldContext& ctx, const SamplerConfig& config,
                               const std::vector<PauliIndex>& vertex_probes,
                               const std::vector<PauliPair>& pair_probes,
                               Exec exec = Exec::kParallel);

/// One line per probe: kind, probe, class size, tv, sigma.
std::string statistics_csv(const FieldContext& ctx, const PairStatistics& stats);

}  // namespace tvd

#endif  // TVD_DESIGN_SAMPLER_H
