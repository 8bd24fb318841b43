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

// Reference implementations used only by tests. They avoid the library's
// tables and word tricks so that agreement means something.

#ifndef TVD_TESTS_ORACLES_H
#define TVD_TESTS_ORACLES_H

#include <cstdint>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<int>>;

// Shift-and-add product of two field elements modulo poly.
inline uint32_t gf_mul(uint32_t a, uint32_t b, uint32_t poly, int m) {
  uint32_t acc = 0;
  for (int i = 0; i < m; ++i) {
    if ((b >> i) & 1u) acc ^= a;
    a <<= 1;
    if ((a >> m) & 1u) a ^= poly;
  }
  return acc;
}

inline uint32_t gf_pow(uint32_t a, int64_t e, uint32_t poly, int m) {
  uint32_t r = 1;
  for (int64_t i = 0; i < e; ++i) r = gf_mul(r, a, poly, m);
  return r;
}

// x + x^2 + x^4 + ... + x^(2^(m-1)), which must be 0 or 1.
inline int gf_trace(uint32_t x, uint32_t poly, int m) {
  uint32_t sum = 0;
  uint32_t term = x;
  for (int k = 0; k < m; ++k) {
    sum ^= term;
    term = gf_mul(term, term, poly, m);
  }
  return static_cast<int>(sum);
}

inline uint32_t gf_inv(uint32_t a, uint32_t poly, int m) {
  for (uint32_t x = 1; x < (1u << m); ++x) {
    if (gf_mul(a, x, poly, m) == 1) return x;
  }
  return 0;
}

inline Mat zeros(int r, int c) { return Mat(r, std::vector<int>(c, 0)); }

inline Mat identity(int n) {
  Mat out = zeros(n, n);
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

inline Mat mul(const Mat& x, const Mat& y) {
  Mat out = zeros(static_cast<int>(x.size()), static_cast<int>(y[0].size()));
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < y[0].size(); ++j) {
      int s = 0;
      for (size_t k = 0; k < y.size(); ++k) s ^= x[i][k] & y[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

inline Mat transpose(const Mat& x) {
  Mat out = zeros(static_cast<int>(x[0].size()), static_cast<int>(x.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < x[0].size(); ++j) out[j][i] = x[i][j];
  }
  return out;
}

// [[0, I], [I, 0]] of size 2m.
inline Mat omega(int m) {
  Mat out = zeros(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) out[i][m + i] = out[m + i][i] = 1;
  return out;
}

inline bool symplectic(const Mat& f) {
  const int m = static_cast<int>(f.size()) / 2;
  return mul(mul(f, omega(m)), transpose(f)) == omega(m);
}

// Row-vector times matrix on bit lists.
inline std::vector<int> vecmul(const std::vector<int>& x, const Mat& f) {
  std::vector<int> out(f[0].size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] ^= f[i][j];
  }
  return out;
}

inline std::vector<int> bits(uint32_t w, int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = (w >> i) & 1u;
  return out;
}

inline uint32_t word(const std::vector<int>& b) {
  uint32_t w = 0;
  for (size_t i = 0; i < b.size(); ++i) w |= static_cast<uint32_t>(b[i] & 1) << i;
  return w;
}

inline int rank(Mat a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c]) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i != r && a[i][c]) {
        for (int j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace oracle

#endif  // TVD_TESTS_ORACLES_H
