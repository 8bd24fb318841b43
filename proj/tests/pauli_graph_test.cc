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

#include <gtest/gtest.h>

#include <map>
#include <set>

using tvd::Census;
using tvd::EdgeKind;
using tvd::FieldContext;
using tvd::OrbitInvariant;
using tvd::PauliPair;
using tvd::PslElement;

namespace {

PauliPair pair(const FieldContext& ctx, uint32_t x, uint32_t y) {
  return {tvd::from_binary(ctx, x), tvd::from_binary(ctx, y)};
}

}  // namespace

TEST(pauli_graph, worked_example_m3) {
  FieldContext ctx(3);
  const auto a = ctx.alpha();
  const PauliPair e1{{a, ctx.zero()}, {ctx.one(), ctx.exp(2)}};
  const PauliPair e2{{a, ctx.zero()}, {ctx.one(), a}};
  const PauliPair e3{{a, ctx.zero()}, {ctx.one(), ctx.zero()}};
  EXPECT_EQ(tvd::classify_pair(ctx, e1), EdgeKind::kNonEdge);
  EXPECT_EQ(tvd::classify_pair(ctx, e2), EdgeKind::kType2);
  EXPECT_EQ(tvd::classify_pair(ctx, e3), EdgeKind::kType1);
  EXPECT_EQ(tvd::orbit_invariant(ctx, e1), (OrbitInvariant{EdgeKind::kNonEdge, ctx.exp(3)}));
  EXPECT_EQ(tvd::orbit_invariant(ctx, e2), (OrbitInvariant{EdgeKind::kType2, ctx.exp(2)}));
  EXPECT_EQ(tvd::orbit_invariant(ctx, e3), (OrbitInvariant{EdgeKind::kType1, a}));
}

TEST(pauli_graph, rejects_degenerate_pairs) {
  FieldContext ctx(3);
  EXPECT_THROW(tvd::classify_pair(ctx, pair(ctx, 0, 3)), std::invalid_argument);
  EXPECT_THROW(tvd::classify_pair(ctx, pair(ctx, 3, 0)), std::invalid_argument);
  EXPECT_THROW(tvd::classify_pair(ctx, pair(ctx, 3, 3)), std::invalid_argument);
}

TEST(pauli_graph, type1_ratio_when_c_is_zero) {
  FieldContext ctx(3);
  // (a b; 0 d) with b = s d.
  const PauliPair p{{ctx.zero(), ctx.mul(ctx.exp(4), ctx.exp(2))}, {ctx.zero(), ctx.exp(2)}};
  EXPECT_EQ(tvd::orbit_invariant(ctx, p), (OrbitInvariant{EdgeKind::kType1, ctx.exp(4)}));
}

TEST(pauli_graph, srg_parameters) {
  EXPECT_EQ(tvd::srg_parameters(2), (tvd::SrgParameters{15, 6, 1, 3}));
  EXPECT_EQ(tvd::srg_parameters(3), (tvd::SrgParameters{63, 30, 13, 15}));
  for (int m : {2, 3, 4}) {
    EXPECT_EQ(tvd::srg_parameters_bruteforce(FieldContext(m)), tvd::srg_parameters(m)) << m;
  }
}

TEST(pauli_graph, census_m2) {
  const Census c = tvd::census(FieldContext(2));
  EXPECT_TRUE(c.exhaustive);
  EXPECT_EQ(c.edges, 90);
  EXPECT_EQ(c.type1, 30);
  EXPECT_EQ(c.type2, 60);
  EXPECT_EQ(c.non_edges, 120);
}

TEST(pauli_graph, census_matches_closed_form) {
  for (int m : {2, 3, 4, 5}) {
    FieldContext ctx(m);
    const Census c = tvd::census(ctx);
    const Census f = tvd::closed_form_census(m);
    EXPECT_EQ(c.vertices, f.vertices);
    EXPECT_EQ(c.ordered_pairs, f.ordered_pairs);
    EXPECT_EQ(c.edges, f.edges);
    EXPECT_EQ(c.type1, f.type1);
    EXPECT_EQ(c.type2, f.type2);
    EXPECT_EQ(c.non_edges, f.non_edges);
    EXPECT_EQ(c.min_out_degree, f.min_out_degree);
    EXPECT_EQ(c.max_out_degree, f.max_out_degree);
    const int64_t n = ctx.size();
    int type1 = 0, type2 = 0, non = 0;
    for (const auto& [inv, count] : c.per_invariant) {
      switch (inv.kind) {
        case EdgeKind::kType1:
          ++type1;
          EXPECT_EQ(count, n * n - 1);
          EXPECT_NE(inv.value, ctx.zero());
          EXPECT_NE(inv.value, ctx.one());
          break;
        case EdgeKind::kType2:
          ++type2;
          EXPECT_EQ(count, (n * n - 1) * n);
          EXPECT_EQ(ctx.trace(inv.value), 0);
          break;
        case EdgeKind::kNonEdge:
          ++non;
          EXPECT_EQ(count, (n * n - 1) * n);
          EXPECT_EQ(ctx.trace(inv.value), 1);
          break;
      }
    }
    EXPECT_EQ(type1, n - 2);
    EXPECT_EQ(type2, (n - 2) / 2);
    EXPECT_EQ(non, n / 2);
  }
}

TEST(pauli_graph, census_invariants_m3) {
  FieldContext ctx(3);
  const Census c = tvd::census(ctx);
  std::set<int> type1_logs, non_edge;
  for (const auto& [inv, count] : c.per_invariant) {
    if (inv.kind == EdgeKind::kType1) type1_logs.insert(ctx.log(inv.value));
    if (inv.kind == EdgeKind::kNonEdge) non_edge.insert(ctx.log(inv.value));
  }
  EXPECT_EQ(type1_logs, (std::set<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(non_edge, (std::set<int>{0, 3, 5, 6}));
}

TEST(pauli_graph, census_serial_equals_parallel) {
  for (int m : {2, 3, 4}) {
    FieldContext ctx(m);
    const Census a = tvd::census(ctx, tvd::Exec::kSerial);
    const Census b = tvd::census(ctx, tvd::Exec::kParallel);
    EXPECT_EQ(tvd::format_census(a, &ctx), tvd::format_census(b, &ctx));
  }
}

TEST(pauli_graph, census_refuses_large_m) {
  const Census c = tvd::census(FieldContext(7));
  EXPECT_FALSE(c.exhaustive);
  EXPECT_TRUE(c.per_invariant.empty());
  EXPECT_EQ(c.edges, tvd::closed_form_census(7).edges);
  EXPECT_NE(tvd::format_census(c).find("mode closed-form"), std::string::npos);
}

TEST(pauli_graph, format_census_lines) {
  FieldContext ctx(2);
  const std::string text = tvd::format_census(tvd::census(ctx), &ctx);
  EXPECT_NE(text.find("srg 15 6 1 3\n"), std::string::npos);
  EXPECT_NE(text.find("edges 90\n"), std::string::npos);
  EXPECT_NE(text.find("type1 30\n"), std::string::npos);
  EXPECT_NE(text.find("type2 60\n"), std::string::npos);
}

TEST(pauli_graph, commutation_is_symmetric) {
  FieldContext ctx(3);
  for (uint32_t x = 1; x < 64; ++x) {
    for (uint32_t y = 1; y < 64; ++y) {
      if (x == y) continue;
      ASSERT_EQ(tvd::classify_pair(ctx, pair(ctx, x, y)) == EdgeKind::kNonEdge,
                tvd::classify_pair(ctx, pair(ctx, y, x)) == EdgeKind::kNonEdge);
    }
  }
}

TEST(pauli_graph, invariant_preserved_exhaustive_m2) {
  FieldContext ctx(2);
  const auto group = tvd::enumerate_psl(ctx);
  for (uint32_t x = 1; x < 16; ++x) {
    for (uint32_t y = 1; y < 16; ++y) {
      if (x == y) continue;
      const PauliPair p = pair(ctx, x, y);
      const OrbitInvariant inv = tvd::orbit_invariant(ctx, p);
      for (const auto& g : group) ASSERT_EQ(tvd::orbit_invariant(ctx, tvd::act(ctx, g, p)), inv);
    }
  }
}

TEST(pauli_graph, invariant_preserved_sampled) {
  for (int m : {3, 4}) {
    FieldContext ctx(m);
    tvd::Rng rng = tvd::substream(5, m);
    const uint64_t nv = uint64_t{ctx.size()} * ctx.size() - 1;
    for (int trial = 0; trial < 100000; ++trial) {
      const uint32_t x = 1 + static_cast<uint32_t>(tvd::uniform_below(rng, nv));
      uint32_t y = 1 + static_cast<uint32_t>(tvd::uniform_below(rng, nv - 1));
      if (y >= x) ++y;
      const PauliPair p = pair(ctx, x, y);
      const PslElement g = tvd::sample_psl(ctx, rng);
      ASSERT_EQ(tvd::orbit_invariant(ctx, tvd::act(ctx, g, p)), tvd::orbit_invariant(ctx, p));
    }
  }
}

TEST(pauli_graph, orbit_partition_statistics) {
  for (int m : {2, 3, 4}) {
    FieldContext ctx(m);
    const int64_t n = ctx.size();
    const tvd::OrbitPartition part = tvd::orbit_partition(ctx);
    std::map<OrbitInvariant, int> orbit_with;
    std::map<EdgeKind, std::vector<size_t>> sizes;
    for (size_t o = 0; o < part.orbits.size(); ++o) {
      const auto& members = part.orbits[o];
      const OrbitInvariant inv = tvd::orbit_invariant(ctx, part.pairs[members[0]]);
      for (int k : members) ASSERT_EQ(tvd::orbit_invariant(ctx, part.pairs[k]), inv);
      // Distinct orbits carry distinct invariants.
      EXPECT_TRUE(orbit_with.emplace(inv, static_cast<int>(o)).second);
      sizes[inv.kind].push_back(members.size());
    }
    EXPECT_EQ(sizes[EdgeKind::kNonEdge].size(), static_cast<size_t>(n / 2));
    EXPECT_EQ(sizes[EdgeKind::kType2].size(), static_cast<size_t>((n - 2) / 2));
    EXPECT_EQ(sizes[EdgeKind::kType1].size(), static_cast<size_t>(n - 2));
    for (size_t s : sizes[EdgeKind::kNonEdge]) EXPECT_EQ(static_cast<int64_t>(s), (n * n - 1) * n);
    for (size_t s : sizes[EdgeKind::kType2]) EXPECT_EQ(static_cast<int64_t>(s), (n * n - 1) * n);
    for (size_t s : sizes[EdgeKind::kType1]) EXPECT_EQ(static_cast<int64_t>(s), n * n - 1);
  }
}

TEST(pauli_graph, equal_invariants_are_joined_by_a_group_element) {
  for (int m : {2, 3}) {
    FieldContext ctx(m);
    const auto group = tvd::enumerate_psl(ctx);
    const uint32_t n2 = ctx.size() * ctx.size();
    std::map<OrbitInvariant, PauliPair> rep;
    for (uint32_t x = 1; x < n2; ++x) {
      for (uint32_t y = 1; y < n2; ++y) {
        if (x == y) continue;
        const PauliPair p = pair(ctx, x, y);
        const auto [it, fresh] = rep.emplace(tvd::orbit_invariant(ctx, p), p);
        if (fresh) continue;
        bool found = false;
        for (const auto& g : group) {
          if (tvd::act(ctx, g, it->second) == p) {
            found = true;
            break;
          }
        }
        ASSERT_TRUE(found) << "m=" << m << " x=" << x << " y=" << y;
      }
    }
  }
}
