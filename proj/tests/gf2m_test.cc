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

#include "tvd/gf2m.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "test_util.h"

using tvd::FieldContext;
using tvd::FieldElement;
using tvd::PolynomialError;

TEST(gf2m, default_polynomial_m3) {
  FieldContext ctx(3);
  EXPECT_EQ(ctx.polynomial(), 0xBu);
  EXPECT_EQ(tvd::poly2::to_string(ctx.polynomial()), "x^3 + x + 1");
}

TEST(gf2m, default_polynomials_are_primitive) {
  for (int m = tvd::kMinDegree; m <= tvd::kMaxDegree; ++m) {
    FieldContext ctx(m);
    EXPECT_EQ(tvd::poly2::degree(ctx.polynomial()), m);
    EXPECT_EQ(tvd::poly2::find_factor(ctx.polynomial()), 0u) << m;
  }
}

TEST(gf2m, reducible_polynomial_reports_factor) {
  try {
    FieldContext ctx(3, 0xF);  // x^3 + x^2 + x + 1
    FAIL() << "accepted a reducible polynomial";
  } catch (const PolynomialError& e) {
    EXPECT_EQ(e.reason(), PolynomialError::Reason::kReducible);
    EXPECT_EQ(e.witness(), 0x3u);  // x + 1
    EXPECT_EQ(tvd::poly2::mod(0xF, e.witness()), 0u);
  }
}

TEST(gf2m, non_primitive_polynomial_reports_order) {
  // x^4 + x^3 + x^2 + x + 1 is irreducible, but x^5 = 1 modulo it.
  try {
    FieldContext ctx(4, 0x1F);
    FAIL() << "accepted a non-primitive polynomial";
  } catch (const PolynomialError& e) {
    EXPECT_EQ(e.reason(), PolynomialError::Reason::kNotPrimitive);
    EXPECT_EQ(e.witness(), 5u);
    EXPECT_EQ(oracle::gf_pow(2, 5, 0x1F, 4), 1u);
  }
}

TEST(gf2m, bad_degree) {
  EXPECT_THROW(FieldContext(3, 0x13), PolynomialError);
  EXPECT_THROW(FieldContext(1), std::invalid_argument);
  EXPECT_THROW(FieldContext(17), std::invalid_argument);
}

TEST(gf2m, alpha_order_m4) {
  FieldContext ctx(4);
  int order = 1;
  for (uint32_t x = 2; x != 1; x = oracle::gf_mul(x, 2, ctx.polynomial(), 4)) ++order;
  EXPECT_EQ(order, 15);
  EXPECT_EQ(ctx.exp(15), ctx.one());
  for (int k = 1; k < 15; ++k) EXPECT_NE(ctx.exp(k), ctx.one());
}

TEST(gf2m, trace_table_m3) {
  FieldContext ctx(3);
  for (int k : {1, 2, 4}) EXPECT_EQ(ctx.trace(ctx.exp(k)), 0) << k;
  for (int k : {0, 3, 5, 6}) EXPECT_EQ(ctx.trace(ctx.exp(k)), 1) << k;
  EXPECT_EQ(ctx.trace(ctx.zero()), 0);
}

TEST(gf2m, arithmetic_m3) {
  FieldContext ctx(3);
  EXPECT_EQ(ctx.mul(ctx.exp(3), ctx.exp(5)), ctx.alpha());
  EXPECT_EQ(ctx.inv(ctx.alpha()).coeffs, oracle::gf_inv(2, 0xB, 3));
  EXPECT_EQ(ctx.inv(ctx.alpha()), ctx.exp(6));
  EXPECT_THROW(ctx.inv(ctx.zero()), std::domain_error);
  for (auto a : ctx.elements()) EXPECT_TRUE((a + a).is_zero());
}

TEST(gf2m, gram_and_companion_m3) {
  FieldContext ctx(3);
  const oracle::Mat w = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  const oracle::Mat a = {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  EXPECT_EQ(to_mat(ctx.gram()), w);
  EXPECT_EQ(to_mat(ctx.companion()), a);
  EXPECT_EQ(ctx.dual_coords(ctx.alpha()), 0b100u);
  EXPECT_EQ(ctx.dual_coords(ctx.zero()), 0u);
  EXPECT_EQ(ctx.mul_matrix(ctx.one()), tvd::BitMatrix::identity(3));
  EXPECT_EQ(ctx.mul_matrix(ctx.exp(3)), ctx.companion() * ctx.companion() * ctx.companion());
  EXPECT_EQ(ctx.mul_matrix(ctx.exp(3)), ctx.mul_matrix(ctx.exp(1)) * ctx.mul_matrix(ctx.exp(2)));
  EXPECT_TRUE(ctx.mul_matrix(ctx.zero()).is_zero());
}

class FieldProperties : public ::testing::TestWithParam<int> {};

TEST_P(FieldProperties, matches_oracle_arithmetic) {
  FieldContext ctx(GetParam());
  const int m = ctx.degree();
  for (uint32_t a = 0; a < ctx.size(); ++a) {
    EXPECT_EQ(ctx.trace(FieldElement(a)), oracle::gf_trace(a, ctx.polynomial(), m));
    for (uint32_t b = 0; b < ctx.size(); ++b) {
      ASSERT_EQ(ctx.mul(FieldElement(a), FieldElement(b)).coeffs,
                oracle::gf_mul(a, b, ctx.polynomial(), m));
    }
  }
}

TEST_P(FieldProperties, gram_is_symmetric_hankel_invertible) {
  FieldContext ctx(GetParam());
  const int m = ctx.degree();
  EXPECT_TRUE(ctx.gram().is_symmetric());
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = 1; j < m; ++j) EXPECT_EQ(ctx.gram().get(i, j), ctx.gram().get(i + 1, j - 1));
  }
  EXPECT_EQ(ctx.gram_inv() * ctx.gram(), tvd::BitMatrix::identity(m));
  const auto dual = ctx.dual_basis();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) EXPECT_EQ(ctx.trace(ctx.mul(ctx.exp(i), dual[j])), i == j ? 1 : 0);
  }
}

TEST_P(FieldProperties, multiplication_matrix_relations) {
  FieldContext ctx(GetParam());
  const tvd::BitMatrix& w = ctx.gram();
  std::vector<tvd::BitMatrix> a;
  for (auto z : ctx.elements()) a.push_back(ctx.mul_matrix(z));
  for (uint32_t x = 0; x < ctx.size(); ++x) {
    EXPECT_EQ(a[x] * w, w * a[x].transpose());
    for (uint32_t z = 0; z < ctx.size(); ++z) {
      const uint32_t xz = ctx.mul(FieldElement(x), FieldElement(z)).coeffs;
      ASSERT_EQ(a[z] * a[x], a[xz]);
      ASSERT_EQ(a[x] * a[z], a[xz]);
      ASSERT_EQ(a[x] + a[z], a[x ^ z]);
    }
  }
}

TEST_P(FieldProperties, trace_form) {
  FieldContext ctx(GetParam());
  int zeros = 0;
  for (auto x : ctx.elements()) {
    zeros += ctx.trace(x) == 0;
    bool witnessed = x.is_zero();
    for (auto y : ctx.elements()) {
      ASSERT_EQ(ctx.trace(x + y), ctx.trace(x) ^ ctx.trace(y));
      const int tr = ctx.trace(ctx.mul(x, y));
      ASSERT_EQ(tr, tvd::parity(x.coeffs & ctx.dual_coords(y)));
      ASSERT_EQ(tr, tvd::parity(tvd::vec_mul(x.coeffs, ctx.gram()) & y.coeffs));
      witnessed |= tr == 1;
    }
    EXPECT_TRUE(witnessed) << "trace form degenerate at " << x.coeffs;
  }
  EXPECT_EQ(zeros, static_cast<int>(ctx.size() / 2));
}

TEST_P(FieldProperties, log_exp_sqrt_pow) {
  FieldContext ctx(GetParam());
  for (auto x : ctx.elements()) {
    EXPECT_EQ(ctx.square(ctx.sqrt(x)), x);
    EXPECT_EQ(ctx.from_dual(ctx.dual_coords(x)), x);
    if (x.is_zero()) continue;
    EXPECT_EQ(ctx.exp(ctx.log(x)), x);
    EXPECT_EQ(ctx.mul(x, ctx.inv(x)), ctx.one());
    EXPECT_EQ(ctx.pow(x, 3).coeffs, oracle::gf_pow(x.coeffs, 3, ctx.polynomial(), ctx.degree()));
    EXPECT_EQ(ctx.pow(x, -1), ctx.inv(x));
  }
}

INSTANTIATE_TEST_SUITE_P(small_fields, FieldProperties, ::testing::Values(2, 3, 4, 5));
