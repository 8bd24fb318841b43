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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tvd/design_sampler.h"
#include "tvd/gf2m.h"
#include "tvd/io.h"
#include "tvd/kerdock_psl.h"
#include "tvd/orbit_markov.h"
#include "tvd/parallel.h"
#include "tvd/pauli_graph.h"
#include "tvd/unitary_verify.h"

namespace {

using nlohmann::json;
using tvd::ChainKind;
using tvd::FieldContext;
using tvd::format_double;
using tvd::hex;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArgs = 2;

// Largest m for the orbit chains; rows cost N^2 transvections per state.
constexpr int kChainMaxDegree = 8;
constexpr double kPairSigmas = 4.0;
constexpr int64_t kVerifyDefaultCount = 200000;
constexpr int64_t kVerifyFrameSamples = 2048;

struct Options {
  int m = 3;
  std::string poly;
  double eps = 0.01;
  int64_t steps = -1;
  uint64_t seed = 0;
  int64_t count = 1;
  bool count_given = false;
  std::string out;
  std::string format;
  int threads = 0;
};

struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

FieldContext make_field(const Options& o) {
  if (o.poly.empty()) return FieldContext(o.m);
  return FieldContext(o.m, tvd::parse_hex(o.poly));
}

void require_m(const Options& o, int lo, int hi, const char* what) {
  if (o.m < lo || o.m > hi) {
    throw BadArgs(std::string(what) + " needs " + std::to_string(lo) + " <= m <= " + std::to_string(hi));
  }
}

std::string format_or(const Options& o, const std::string& fallback) {
  return o.format.empty() ? fallback : o.format;
}

tvd::SamplerConfig sampler_config(const Options& o) {
  tvd::SamplerConfig c;
  c.m = o.m;
  if (o.steps >= 0) {
    c.steps = tvd::FixedSteps{o.steps};
  } else {
    c.steps = tvd::TargetEpsilon{o.eps};
  }
  c.seed = o.seed;
  c.count = o.count;
  return c;
}

json matrix_json(const tvd::TransitionMatrix& q) { return json::parse(tvd::to_json(q)); }

std::string rows_text(const tvd::TransitionMatrix& q) {
  std::ostringstream os;
  for (int i = 0; i < q.n; ++i) {
    os << "  " << tvd::to_string(q.states[i].kind) << " " << hex(q.states[i].value.coeffs) << ":";
    for (int j = 0; j < q.n; ++j) os << " " << q.at(i, j);
    os << "\n";
  }
  return os.str();
}

std::string checks_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  std::string failures;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (!c.pass) failures += (failures.empty() ? "" : ",") + c.name;
  }
  os << "failures " << (failures.empty() ? "none" : failures) << "\n";
  return os.str();
}

json checks_json(const std::vector<Check>& checks) {
  json list = json::array();
  json failures = json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) failures.push_back(c.name);
  }
  return {{"checks", list}, {"failures", failures}};
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

int field_info(const Options& o, std::ostream& out) {
  const FieldContext ctx = make_field(o);
  const std::string fmt = format_or(o, "text");
  if (fmt == "json") {
    json table = json::array();
    for (uint32_t k = 0; k + 1 < ctx.size(); ++k) {
      const auto e = ctx.exp(k);
      table.push_back({{"log", k}, {"coeffs", hex(e.coeffs)}, {"trace", ctx.trace(e)},
                       {"dual", hex(ctx.dual_coords(e))}});
    }
    json w = json::array();
    json a = json::array();
    for (int r = 0; r < ctx.degree(); ++r) {
      w.push_back(hex(ctx.gram().row(r)));
      a.push_back(hex(ctx.companion().row(r)));
    }
    out << json{{"m", ctx.degree()}, {"polynomial", hex(ctx.polynomial())},
                {"polynomial_text", tvd::poly2::to_string(ctx.polynomial())}, {"gram", w},
                {"companion", a}, {"elements", table}}
               .dump(2)
        << "\n";
  } else if (fmt == "csv") {
    out << "log,coeffs,trace,dual\n";
    for (uint32_t k = 0; k + 1 < ctx.size(); ++k) {
      const auto e = ctx.exp(k);
      out << k << "," << hex(e.coeffs) << "," << ctx.trace(e) << "," << hex(ctx.dual_coords(e)) << "\n";
    }
  } else {
    out << "m " << ctx.degree() << "\n";
    out << "polynomial " << hex(ctx.polynomial()) << " " << tvd::poly2::to_string(ctx.polynomial()) << "\n";
    out << "W\n" << ctx.gram().to_string();
    out << "A\n" << ctx.companion().to_string();
    out << "trace\n";
    out << "  0 0x0 0\n";
    for (uint32_t k = 0; k + 1 < ctx.size(); ++k) {
      const auto e = ctx.exp(k);
      out << "  alpha^" << k << " " << hex(e.coeffs) << " " << ctx.trace(e) << "\n";
    }
  }
  return kExitOk;
}

int graph_census(const Options& o, std::ostream& out) {
  const FieldContext ctx = make_field(o);
  const tvd::Census c = tvd::census(ctx);
  const tvd::Census closed = tvd::closed_form_census(ctx.degree());
  const bool ok = c.edges == closed.edges && c.type1 == closed.type1 && c.type2 == closed.type2 &&
                  c.non_edges == closed.non_edges;
  const std::string fmt = format_or(o, "text");
  if (fmt == "json") {
    const tvd::SrgParameters p = tvd::srg_parameters(ctx.degree());
    json inv = json::array();
    for (const auto& [k, n] : c.per_invariant) {
      inv.push_back({{"kind", tvd::to_string(k.kind)}, {"value", hex(k.value.coeffs)}, {"count", n}});
    }
    out << json{{"m", c.m},
                {"exhaustive", c.exhaustive},
                {"srg", {p.n, p.t, p.lambda, p.mu}},
                {"vertices", c.vertices},
                {"ordered_pairs", c.ordered_pairs},
                {"edges", c.edges},
                {"type1", c.type1},
                {"type2", c.type2},
                {"non_edges", c.non_edges},
                {"out_degree", {c.min_out_degree, c.max_out_degree}},
                {"invariants", inv},
                {"matches_closed_form", ok}}
               .dump(2)
        << "\n";
  } else if (fmt == "csv") {
    out << "key,value\nm," << c.m << "\nvertices," << c.vertices << "\nedges," << c.edges << "\ntype1,"
        << c.type1 << "\ntype2," << c.type2 << "\nnon_edges," << c.non_edges << "\n";
  } else {
    out << tvd::format_census(c, &ctx);
    out << "closed_form " << (ok ? "match" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int chain(const Options& o, std::ostream& out) {
  require_m(o, 2, kChainMaxDegree, "chain");
  const FieldContext ctx = make_field(o);
  const int m = ctx.degree();
  const tvd::TransitionMatrix q1c = tvd::q1_closed_form(m);
  const tvd::TransitionMatrix q1 = tvd::q_empirical(ctx, ChainKind::kNonEdges);
  const tvd::TransitionMatrix q0 = tvd::q_empirical(ctx, ChainKind::kEdges);
  const tvd::StructureReport rep = tvd::q0_structure_check(m, q0);
  std::vector<Check> checks = {{"q1_closed_form", q1 == q1c, ""},
                               {"q0_structure", rep.ok, rep.ok ? "" : rep.failures[0]}};
  const std::string fmt = format_or(o, "json");
  if (fmt == "json") {
    json j = checks_json(checks);
    j["m"] = m;
    j["q1_closed_form"] = matrix_json(q1c);
    j["q1_empirical"] = matrix_json(q1);
    j["q0_empirical"] = matrix_json(q0);
    j["r"] = rep.r;
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "# q1_empirical\n" << tvd::to_csv(q1.to_double());
    out << "# q0_empirical\n" << tvd::to_csv(q0.to_double());
  } else {
    out << "m " << m << "\n";
    out << "Q1 numerators over " << q1.den << "\n" << rows_text(q1);
    out << "Q0 numerators over " << q0.den << "\n" << rows_text(q0);
    out << "R\n";
    for (const auto& row : rep.r) {
      out << " ";
      for (int64_t x : row) out << " " << x;
      out << "\n";
    }
    out << checks_text(checks);
  }
  return all_pass(checks) ? kExitOk : kExitCheckFailed;
}

json spectral_json(const tvd::SpectralReport& r) {
  json ev = json::array();
  for (const auto& z : r.eigenvalues) ev.push_back({z.real(), z.imag()});
  return {{"eigenvalues", ev},     {"lambda2", r.lambda2},      {"lambda_min", r.lambda_min},
          {"gap", r.gap},          {"max_imag", r.max_imag},    {"stationary", r.stationary},
          {"stationary_residual", r.stationary_residual}};
}

int spectra(const Options& o, std::ostream& out) {
  require_m(o, 2, kChainMaxDegree, "spectra");
  const FieldContext ctx = make_field(o);
  const int m = ctx.degree();
  const tvd::SpectralReport r0 = tvd::spectral_report(tvd::q_empirical(ctx, ChainKind::kEdges));
  const tvd::SpectralReport r1 = tvd::spectral_report(tvd::q_empirical(ctx, ChainKind::kNonEdges));
  const tvd::MixingReport mix = tvd::mixing_report(m, o.eps, &r0);
  const std::vector<Check> checks = {
      {"lambda2_q0_below_bound", r0.lambda2 < mix.lambda_upper, ""},
      {"lambda_min_q0_above_bound", r0.lambda_min > mix.lambda_lower, ""},
  };
  const std::string fmt = format_or(o, "json");
  if (fmt == "json") {
    json j = checks_json(checks);
    j["m"] = m;
    j["q0"] = spectral_json(r0);
    j["q1"] = spectral_json(r1);
    j["mixing"] = {{"eps", mix.eps},
                   {"lambda_upper", mix.lambda_upper},
                   {"lambda_lower", mix.lambda_lower},
                   {"gap", mix.gap},
                   {"pi_star", mix.pi_star},
                   {"log_term", mix.log_term},
                   {"bound", mix.bound},
                   {"large_n_approximation", mix.large_n_approximation},
                   {"numeric_bound", mix.numeric_bound.value_or(-1)},
                   {"numeric_gap", mix.numeric_gap.value_or(0.0)}};
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "chain,index,real,imag\n";
    for (size_t i = 0; i < r0.eigenvalues.size(); ++i) {
      out << "edges," << i << "," << format_double(r0.eigenvalues[i].real()) << ","
          << format_double(r0.eigenvalues[i].imag()) << "\n";
    }
    for (size_t i = 0; i < r1.eigenvalues.size(); ++i) {
      out << "nonedges," << i << "," << format_double(r1.eigenvalues[i].real()) << ","
          << format_double(r1.eigenvalues[i].imag()) << "\n";
    }
  } else {
    out << "m " << m << "\n";
    out << "q0 lambda2 " << format_double(r0.lambda2) << " lambda_min " << format_double(r0.lambda_min)
        << " gap " << format_double(r0.gap) << "\n";
    out << "q1 lambda2 " << format_double(r1.lambda2) << "\n";
    out << "bound lambda2 < " << format_double(mix.lambda_upper) << ", lambda_min > "
        << format_double(mix.lambda_lower) << "\n";
    out << "mixing eps " << format_double(mix.eps) << " bound " << mix.bound << " large_n "
        << mix.large_n_approximation << " numeric " << mix.numeric_bound.value_or(-1) << "\n";
    out << checks_text(checks);
  }
  return all_pass(checks) ? kExitOk : kExitCheckFailed;
}

int convergence(const Options& o, std::ostream& out) {
  require_m(o, 2, kChainMaxDegree, "convergence");
  const FieldContext ctx = make_field(o);
  const int64_t t_max = o.steps >= 0 ? o.steps : tvd::mixing_time_bound(ctx.degree(), o.eps);
  out << "chain,start_kind,start_value,t,tv\n";
  for (ChainKind kind : {ChainKind::kEdges, ChainKind::kNonEdges}) {
    const tvd::TransitionMatrix q = tvd::q_empirical(ctx, kind);
    const tvd::SpectralReport rep = tvd::spectral_report(q);
    for (int s = 0; s < q.n; ++s) {
      std::vector<double> start(q.n, 0.0);
      start[s] = 1.0;
      const auto tv = tvd::tv_curve(q, start, static_cast<int>(t_max), rep.stationary);
      for (size_t t = 0; t < tv.size(); ++t) {
        out << tvd::to_string(kind) << "," << tvd::to_string(q.states[s].kind) << ","
            << hex(q.states[s].value.coeffs) << "," << t << "," << format_double(tv[t]) << "\n";
      }
    }
  }
  return kExitOk;
}

int sample(const Options& o, std::ostream& out) {
  const FieldContext ctx = make_field(o);
  tvd::SampleStream stream(ctx, sampler_config(o));
  tvd::DesignSample s;
  while (stream.next(s)) out << tvd::to_json_line(ctx, s) << "\n";
  return kExitOk;
}

int verify(const Options& o, std::ostream& out) {
  require_m(o, 2, tvd::kDenseMaxQubits, "verify");
  const FieldContext ctx = make_field(o);
  const int m = ctx.degree();
  std::vector<Check> checks;

  {
    std::vector<tvd::Generator> gens = {tvd::OmegaGen{}};
    for (int t = 1; t <= m; ++t) gens.push_back(tvd::GGen{t});
    for (tvd::FieldElement z : ctx.elements()) {
      gens.push_back(tvd::TGen{tvd::kerdock_matrix(ctx, z)});
      if (!z.is_zero()) gens.push_back(tvd::LGen{ctx.mul_matrix(z)});
    }
    bool ok = true;
    for (const auto& g : gens) {
      ok = ok && tvd::conjugation_check(tvd::generator_unitary(m, g), tvd::generator_matrix(m, g)).ok;
    }
    const size_t n = gens.size();
    checks.push_back({"generators", ok, std::to_string(n) + " checked"});
  }
  {
    bool ok = true;
    const uint32_t n2 = ctx.size() * ctx.size();
    for (uint32_t h = 1; h < n2; ++h) {
      const auto u = tvd::transvection_unitary(m, h);
      ok = ok && tvd::is_unitary(u) && tvd::conjugation_check(u, tvd::transvection_matrix(m, h)).ok;
    }
    checks.push_back({"transvections", ok, std::to_string(n2 - 1) + " checked"});
  }
  {
    bool ok = true;
    const auto all = tvd::enumerate_psl(ctx);
    for (const auto& g : all) {
      const auto u = tvd::psl_unitary(ctx, g);
      ok = ok && tvd::is_unitary(u) && tvd::conjugation_check(u, tvd::psl_to_symplectic(ctx, g)).ok;
    }
    checks.push_back({"psl", ok, std::to_string(all.size()) + " checked"});
  }

  tvd::SamplerConfig cfg = sampler_config(o);
  if (!o.count_given) cfg.count = kVerifyDefaultCount;
  const double target = o.eps;
  {
    tvd::SamplerConfig small = cfg;
    small.count = std::min<int64_t>(cfg.count, 64);
    bool ok = true;
    for (const auto& s : tvd::sample_batch(ctx, small)) {
      ok = ok && tvd::conjugation_check(tvd::sample_unitary(ctx, s), s.composed).ok;
    }
    checks.push_back({"samples", ok, std::to_string(small.count) + " checked"});
  }
  {
    std::vector<tvd::PauliPair> probes;
    for (ChainKind kind : {ChainKind::kEdges, ChainKind::kNonEdges}) {
      for (const auto& s : tvd::orbit_states(ctx, kind)) probes.push_back(tvd::representative(ctx, s));
    }
    const tvd::PairStatistics st = tvd::pair_statistics(ctx, cfg, {}, probes);
    for (const auto& p : st.pairs) {
      const auto inv = tvd::orbit_invariant(ctx, p.probe);
      const double limit = target + kPairSigmas * p.sigma;
      checks.push_back({std::string("pairs_") + tvd::to_string(inv.kind) + "_" + hex(inv.value.coeffs),
                        p.tv <= limit, "tv " + format_double(p.tv) + " limit " + format_double(limit)});
    }
  }
  {
    const int k = m <= 2 ? 3 : 2;
    const double kfact = k == 3 ? 6.0 : 2.0;
    tvd::SamplerConfig frame = cfg;
    frame.count = std::min<int64_t>(cfg.count, kVerifyFrameSamples);
    const tvd::FrameEstimate est =
        tvd::frame_potential_estimate(tvd::ensemble_from_samples(ctx, tvd::sample_batch(ctx, frame)), k);
    const double n = ctx.size();
    const double delta = target * target / (n * n) + std::pow(n, 2.0 * k) / static_cast<double>(est.samples) +
                         4 * est.std_error;
    checks.push_back({"frame_potential_" + std::to_string(k),
                      est.value >= kfact - 1e-6 && est.value <= kfact + delta,
                      format_double(est.value) + " in [" + format_double(kfact) + ", " +
                          format_double(kfact + delta) + "]"});
  }

  const std::string fmt = format_or(o, "text");
  if (fmt == "json") {
    json j = checks_json(checks);
    j["m"] = m;
    j["seed"] = o.seed;
    out << j.dump(2) << "\n";
  } else {
    out << checks_text(checks);
  }
  return all_pass(checks) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transvection designs over GF(2^m): fields, Pauli graphs, orbit chains, samplers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--m", o.m, "Field degree")->check(CLI::Range(tvd::kMinDegree, tvd::kMaxDegree));
  app.add_option("--poly", o.poly, "Primitive polynomial as hex, e.g. 0xB");
  auto* eps = app.add_option("--epsilon", o.eps, "Target accuracy")->check(CLI::Range(0.0, 1.0));
  auto* steps = app.add_option("--steps", o.steps, "Transvection count")->check(CLI::NonNegativeNumber);
  eps->excludes(steps);
  steps->excludes(eps);
  app.add_option("--seed", o.seed, "Base seed")->envname("TVD_SEED");
  auto* count = app.add_option("--count", o.count, "Number of samples")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Output path (stdout when absent)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", o.threads, "Worker cap (0 = runtime default)")->check(CLI::NonNegativeNumber);

  using Handler = int (*)(const Options&, std::ostream&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands = {
      {"field-info", "Polynomial, W, companion matrix and trace table", field_info},
      {"graph-census", "Pair census of the Pauli graph", graph_census},
      {"chain", "Orbit transition matrices with structure checks", chain},
      {"spectra", "Eigenvalues and mixing-time bound", spectra},
      {"convergence", "TV curves from every point-mass start (CSV)", convergence},
      {"sample", "Stream design samples as JSON lines", sample},
      {"verify", "Dense unitary oracle and pair statistics (m <= 3)", verify},
  };
  for (const auto& [name, help, fn] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }
  o.count_given = count->count() > 0;
  if (eps->count() > 0 && (o.eps <= 0.0 || o.eps >= 1.0)) {
    std::cerr << "error: --epsilon must lie strictly between 0 and 1\n";
    return kExitBadArgs;
  }
  tvd::set_num_threads(o.threads);

  for (const auto& [name, help, fn] : commands) {
    if (!app.got_subcommand(name)) continue;
    std::ostringstream buf;
    int code = kExitOk;
    try {
      code = fn(o, buf);
    } catch (const BadArgs& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadArgs;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadArgs;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitCheckFailed;
    }
    if (o.out.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << o.out << "\n";
        return kExitBadArgs;
      }
      f << buf.str();
    }
    return code;
  }
  return kExitBadArgs;
}
