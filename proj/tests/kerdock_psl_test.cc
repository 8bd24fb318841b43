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

#include "tvd/kerdock_psl.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.h"
#include "test_util.h"

using tvd::BitMatrix;
using tvd::FieldContext;
using tvd::FieldElement;
using tvd::PauliIndex;
using tvd::PslElement;
using tvd::SubgroupLabel;
using tvd::SymplecticMatrix;

namespace {

PslElement swap_element(const FieldContext& ctx) {
  return {ctx.zero(), ctx.one(), ctx.one(), ctx.zero()};
}

}  // namespace

TEST(kerdock, matrices) {
  for (int m : {2, 3, 4}) {
    FieldContext ctx(m);
    EXPECT_TRUE(tvd::kerdock_matrix(ctx, ctx.zero()).is_zero());
    EXPECT_EQ(tvd::kerdock_matrix(ctx, ctx.one()), ctx.gram());
    for (auto x : ctx.elements()) {
      const BitMatrix px = tvd::kerdock_matrix(ctx, x);
      EXPECT_TRUE(px.is_symmetric());
      EXPECT_EQ(px, ctx.mul_matrix(ctx.square(x)) * ctx.gram());
      for (auto z : ctx.elements()) {
        if (x == z) continue;
        ASSERT_EQ(oracle::rank(to_mat(px + tvd::kerdock_matrix(ctx, z))), m);
      }
    }
  }
}

TEST(kerdock, classify_examples_m3) {
  FieldContext ctx(3);
  EXPECT_EQ(tvd::classify_subgroup(ctx, {ctx.alpha(), ctx.exp(3)}),
            SubgroupLabel::finite(ctx.exp(2)));
  EXPECT_EQ(tvd::classify_subgroup(ctx, {ctx.zero(), ctx.alpha()}), SubgroupLabel::inf());
  EXPECT_EQ(tvd::classify_subgroup(ctx, {ctx.alpha(), ctx.zero()}),
            SubgroupLabel::finite(ctx.zero()));
  EXPECT_THROW(tvd::classify_subgroup(ctx, {}), std::invalid_argument);
  EXPECT_EQ(tvd::to_string(SubgroupLabel::inf()), "inf");
  EXPECT_EQ(tvd::to_string(SubgroupLabel::finite(ctx.exp(3))), "0x3");
}

TEST(kerdock, subgroups_partition_the_vertices) {
  for (int m : {2, 3, 4}) {
    FieldContext ctx(m);
    std::map<SubgroupLabel, std::vector<uint32_t>> classes;
    const uint32_t n2 = ctx.size() * ctx.size();
    for (uint32_t x = 1; x < n2; ++x) {
      classes[tvd::classify_subgroup(ctx, tvd::from_binary(ctx, x))].push_back(x);
    }
    EXPECT_EQ(classes.size(), ctx.size() + 1);
    for (const auto& [label, members] : classes) {
      EXPECT_EQ(members.size(), ctx.size() - 1);
      for (uint32_t x : members) {
        for (uint32_t y : members) ASSERT_EQ(tvd::symplectic_form(m, x, y), 0);
      }
    }
  }
}

TEST(kerdock, label_matches_kerdock_rows) {
  // E([x | x P_w]) lies in the class labelled w^2 because P_w = A_{w^2} W.
  for (int m : {2, 3, 4}) {
    FieldContext ctx(m);
    for (auto w : ctx.elements()) {
      const BitMatrix p = tvd::kerdock_matrix(ctx, w);
      for (uint32_t x = 1; x < ctx.size(); ++x) {
        const uint32_t word = x | (tvd::vec_mul(x, p) << m);
        EXPECT_EQ(tvd::classify_subgroup(ctx, tvd::from_binary(ctx, word)),
                  SubgroupLabel::finite(ctx.square(w)));
      }
    }
  }
}

TEST(psl, theta_examples) {
  FieldContext ctx(3);
  EXPECT_EQ(tvd::psl_to_symplectic(ctx, PslElement::identity()), SymplecticMatrix::identity(3));
  const BitMatrix z(3, 3);
  EXPECT_EQ(tvd::psl_to_symplectic(ctx, swap_element(ctx)).matrix(),
            BitMatrix::block(z, ctx.gram(), ctx.gram_inv(), z));
  EXPECT_THROW(tvd::psl_to_symplectic(ctx, {ctx.one(), ctx.one(), ctx.one(), ctx.one()}),
               std::invalid_argument);
}

TEST(psl, theta_is_symplectic_and_matches_field_action) {
  for (int m : {2, 3, 4}) {
    FieldContext ctx(m);
    tvd::Rng rng = tvd::substream(7, m);
    for (int trial = 0; trial < 200; ++trial) {
      const PslElement g = tvd::sample_psl(ctx, rng);
      const SymplecticMatrix f = tvd::psl_to_symplectic(ctx, g);
      ASSERT_TRUE(oracle::symplectic(to_mat(f.matrix())));
      for (uint32_t x = 0; x < ctx.size() * ctx.size(); x += 5) {
        const PauliIndex p = tvd::from_binary(ctx, x);
        const PauliIndex want{ctx.mul(p.a, ctx.square(g.delta)) + ctx.mul(p.b, ctx.square(g.gamma)),
                              ctx.mul(p.a, ctx.square(g.beta)) + ctx.mul(p.b, ctx.square(g.alpha))};
        ASSERT_EQ(tvd::apply_symplectic(ctx, f, p), want);
        ASSERT_EQ(tvd::apply_theta(ctx, g, p), want);
      }
    }
  }
}

TEST(psl, theta_reverses_products_under_right_action) {
  FieldContext ctx(2);
  const auto group = tvd::enumerate_psl(ctx);
  for (const auto& g1 : group) {
    const SymplecticMatrix f1 = tvd::psl_to_symplectic(ctx, g1);
    EXPECT_EQ(tvd::psl_to_symplectic(ctx, tvd::inverse(g1)), f1.inverse());
    for (const auto& g2 : group) {
      ASSERT_EQ(f1 * tvd::psl_to_symplectic(ctx, g2),
                tvd::psl_to_symplectic(ctx, tvd::multiply(ctx, g2, g1)));
    }
  }
}

TEST(psl, theta_is_injective_m2) {
  FieldContext ctx(2);
  std::set<std::vector<uint32_t>> images;
  for (const auto& g : tvd::enumerate_psl(ctx)) {
    const SymplecticMatrix f = tvd::psl_to_symplectic(ctx, g);
    const auto rows = f.matrix().row_words();
    images.insert(std::vector<uint32_t>(rows.begin(), rows.end()));
  }
  EXPECT_EQ(images.size(), 60u);
}

TEST(psl, mobius_examples) {
  FieldContext ctx(3);
  EXPECT_EQ(tvd::mobius_action(ctx, swap_element(ctx), SubgroupLabel::finite(ctx.alpha())),
            SubgroupLabel::finite(ctx.exp(6)));
  EXPECT_EQ(tvd::mobius_action(ctx, swap_element(ctx), SubgroupLabel::finite(ctx.zero())),
            SubgroupLabel::inf());
  EXPECT_EQ(tvd::mobius_action(ctx, swap_element(ctx), SubgroupLabel::inf()),
            SubgroupLabel::finite(ctx.zero()));
  for (auto z : ctx.elements()) {
    const SubgroupLabel l = SubgroupLabel::finite(z);
    EXPECT_EQ(tvd::mobius_action(ctx, PslElement::identity(), l), l);
    for (auto x : ctx.elements()) {
      const PslElement shift{ctx.one(), x, ctx.zero(), ctx.one()};
      EXPECT_EQ(tvd::mobius_action(ctx, shift, l), SubgroupLabel::finite(z + x));
    }
  }
  EXPECT_EQ(tvd::mobius_action(ctx, PslElement::identity(), SubgroupLabel::inf()),
            SubgroupLabel::inf());
}

TEST(psl, covariance_exhaustive_m2) {
  FieldContext ctx(2);
  int direct_mismatch = 0;
  for (const auto& g : tvd::enumerate_psl(ctx)) {
    for (uint32_t x = 1; x < 16; ++x) {
      const PauliIndex p = tvd::from_binary(ctx, x);
      const SubgroupLabel before = tvd::classify_subgroup(ctx, p);
      const SubgroupLabel after = tvd::classify_subgroup(ctx, tvd::apply_theta(ctx, g, p));
      ASSERT_EQ(after, tvd::induced_subgroup_action(ctx, g, before));
      ASSERT_EQ(after, tvd::mobius_action(ctx, tvd::frobenius(ctx, tvd::inverse(g)), before));
      direct_mismatch += after != tvd::mobius_action(ctx, g, before);
    }
  }
  // The plain Mobius map of g is a different action; it is not what theta(g) does.
  EXPECT_GT(direct_mismatch, 0);
}

TEST(psl, covariance_sampled) {
  for (int m : {3, 4}) {
    FieldContext ctx(m);
    tvd::Rng rng = tvd::substream(41, m);
    for (int trial = 0; trial < 10000; ++trial) {
      const PslElement g = tvd::sample_psl(ctx, rng);
      const uint32_t x = 1 + static_cast<uint32_t>(tvd::uniform_below(rng, ctx.size() * ctx.size() - 1));
      const PauliIndex p = tvd::from_binary(ctx, x);
      ASSERT_EQ(tvd::classify_subgroup(ctx, tvd::apply_theta(ctx, g, p)),
                tvd::induced_subgroup_action(ctx, g, tvd::classify_subgroup(ctx, p)));
    }
  }
}

TEST(psl, transitive_on_vertices) {
  for (int m : {2, 3}) {
    FieldContext ctx(m);
    const auto group = tvd::enumerate_psl(ctx);
    for (uint32_t start : {1u, 5u, ctx.size() * ctx.size() - 1}) {
      std::set<uint32_t> orbit;
      for (const auto& g : group) {
        orbit.insert(tvd::to_binary(ctx, tvd::apply_theta(ctx, g, tvd::from_binary(ctx, start))));
      }
      EXPECT_EQ(orbit.size(), ctx.size() * ctx.size() - 1);
    }
  }
}

TEST(psl, enumeration_and_generators) {
  for (int m : {2, 3}) {
    FieldContext ctx(m);
    const auto group = tvd::enumerate_psl(ctx);
    const size_t n = ctx.size();
    EXPECT_EQ(group.size(), (n + 1) * n * (n - 1));
    EXPECT_EQ(std::set<PslElement>(group.begin(), group.end()).size(), group.size());
    for (const auto& g : group) ASSERT_TRUE(tvd::is_valid(ctx, g));
    // Closure of the generators is the whole group.
    std::set<PslElement> reached{PslElement::identity()};
    std::vector<PslElement> frontier{PslElement::identity()};
    const auto gens = tvd::psl_generators(ctx);
    while (!frontier.empty()) {
      const PslElement g = frontier.back();
      frontier.pop_back();
      for (const auto& s : gens) {
        const PslElement h = tvd::multiply(ctx, g, s);
        if (reached.insert(h).second) frontier.push_back(h);
      }
    }
    EXPECT_EQ(reached.size(), group.size());
  }
}

TEST(psl, sampling_is_uniform_m2) {
  FieldContext ctx(2);
  const auto group = tvd::enumerate_psl(ctx);
  std::map<PslElement, int> counts;
  tvd::Rng rng = tvd::substream(2024, 1);
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) {
    const PslElement g = tvd::sample_psl(ctx, rng);
    ASSERT_TRUE(tvd::is_valid(ctx, g));
    ++counts[g];
  }
  EXPECT_EQ(counts.size(), 60u);
  const double p = 1.0 / 60.0;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& g : group) EXPECT_LT(std::abs(counts[g] - draws * p), 4 * sigma);
}
