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

#ifndef TVD_TESTS_TEST_UTIL_H
#define TVD_TESTS_TEST_UTIL_H

#include <random>
#include <vector>

#include "oracles.h"
#include "tvd/bitmatrix.h"
#include "tvd/pauli_symplectic.h"

inline oracle::Mat to_mat(const tvd::BitMatrix& b) {
  oracle::Mat out = oracle::zeros(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) out[i][j] = b.get(i, j);
  }
  return out;
}

inline tvd::BitMatrix from_mat(const oracle::Mat& m) {
  tvd::BitMatrix out(static_cast<int>(m.size()), static_cast<int>(m[0].size()));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m[0].size(); ++j) out.set(static_cast<int>(i), static_cast<int>(j), m[i][j]);
  }
  return out;
}

inline tvd::BitMatrix random_invertible(int m, std::mt19937_64& rng) {
  for (;;) {
    tvd::BitMatrix q(m, m);
    for (int i = 0; i < m; ++i) q.set_row(i, static_cast<uint32_t>(rng()));
    if (q.rank() == m) return q;
  }
}

inline tvd::BitMatrix random_symmetric(int m, std::mt19937_64& rng) {
  tvd::BitMatrix p(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const bool v = rng() & 1u;
      p.set(i, j, v);
      p.set(j, i, v);
    }
  }
  return p;
}

inline tvd::Generator random_generator(int m, std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return tvd::OmegaGen{};
    case 1:
      return tvd::LGen{random_invertible(m, rng)};
    case 2:
      return tvd::TGen{random_symmetric(m, rng)};
    default:
      return tvd::GGen{1 + static_cast<int>(rng() % m)};
  }
}

// A product of random generators.
inline tvd::SymplecticMatrix random_symplectic(int m, std::mt19937_64& rng, int length = 12) {
  tvd::SymplecticMatrix f = tvd::SymplecticMatrix::identity(m);
  for (int k = 0; k < length; ++k) f = f * tvd::generator_matrix(m, random_generator(m, rng));
  return f;
}

#endif  // TVD_TESTS_TEST_UTIL_H
