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

#include "tvd/bitmatrix.h"

#include <stdexcept>
#include <utility>

namespace tvd {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), words_(rows, 0u) {
  if (rows < 0 || cols < 0 || cols > 32) {
    throw std::invalid_argument("BitMatrix supports at most 32 columns");
  }
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.words_[i] = 1u << i;
  return m;
}

BitMatrix BitMatrix::from_rows(int cols, std::vector<uint32_t> rows) {
  BitMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (rows[r] & ~m.col_mask()) throw std::invalid_argument("row word exceeds column count");
    m.words_[r] = rows[r];
  }
  return m;
}

BitMatrix BitMatrix::block(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c,
                           const BitMatrix& d) {
  const int n = a.rows_;
  for (const BitMatrix* x : {&a, &b, &c, &d}) {
    if (x->rows_ != n || x->cols_ != n) throw std::invalid_argument("blocks must be n x n");
  }
  BitMatrix out(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    out.words_[i] = a.words_[i] | (b.words_[i] << n);
    out.words_[n + i] = c.words_[i] | (d.words_[i] << n);
  }
  return out;
}

void BitMatrix::set(int r, int c, bool v) {
  if (v) {
    words_[r] |= 1u << c;
  } else {
    words_[r] &= ~(1u << c);
  }
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (get(r, c)) t.words_[c] |= 1u << r;
    }
  }
  return t;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  std::vector<uint32_t> a = words_;
  std::vector<uint32_t> inv = identity(n).words_;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if ((a[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != col && ((a[r] >> col) & 1u)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  BitMatrix out(n, n);
  out.words_ = std::move(inv);
  return out;
}

int BitMatrix::rank() const {
  std::vector<uint32_t> a = words_;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if ((a[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = 0; r < rows_; ++r) {
      if (r != rank && ((a[r] >> col) & 1u)) a[r] ^= a[rank];
    }
    ++rank;
  }
  return rank;
}

bool BitMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

bool BitMatrix::is_zero() const {
  for (uint32_t w : words_) {
    if (w) return false;
  }
  return true;
}

BitMatrix BitMatrix::sub(int r0, int c0, int nrows, int ncols) const {
  BitMatrix out(nrows, ncols);
  const uint32_t mask = out.col_mask();
  for (int r = 0; r < nrows; ++r) out.words_[r] = (words_[r0 + r] >> c0) & mask;
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

BitMatrix operator*(const BitMatrix& x, const BitMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("BitMatrix product: dimension mismatch");
  BitMatrix out(x.rows_, y.cols_);
  for (int r = 0; r < x.rows_; ++r) out.words_[r] = vec_mul(x.words_[r], y);
  return out;
}

BitMatrix operator+(const BitMatrix& x, const BitMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
    throw std::invalid_argument("BitMatrix sum: dimension mismatch");
  }
  BitMatrix out = x;
  for (int r = 0; r < x.rows_; ++r) out.words_[r] ^= y.words_[r];
  return out;
}

}  // namespace tvd
