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

#ifndef TVD_BITMATRIX_H
#define TVD_BITMATRIX_H

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tvd {

/// Parity of the set bits of a word, i.e. the F_2 sum of its entries.
inline int parity(uint32_t x) { return std::popcount(x) & 1; }

/// Dense matrix over F_2 with at most 32 columns.
///
/// Row r is stored as one machine word; bit c of that word is entry (r, c).
/// Vectors are row vectors and act on the left: x -> x M.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  static BitMatrix from_rows(int cols, std::vector<uint32_t> rows);
  /// Assembles [[a, b], [c, d]] from four square blocks of equal size.
  static BitMatrix block(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c,
                         const BitMatrix& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return (words_[r] >> c) & 1u; }
  void set(int r, int c, bool v);
  uint32_t row(int r) const { return words_[r]; }
  void set_row(int r, uint32_t w) { words_[r] = w & col_mask(); }
  std::span<const uint32_t> row_words() const { return words_; }

  BitMatrix transpose() const;
  /// Gauss-Jordan inverse; nullopt when singular or not square.
  std::optional<BitMatrix> inverse() const;
  int rank() const;
  bool is_symmetric() const;
  bool is_zero() const;
  /// Sub-block starting at (r0, c0).
  BitMatrix sub(int r0, int c0, int nrows, int ncols) const;

  std::string to_string() const;

  friend BitMatrix operator*(const BitMatrix& x, const BitMatrix& y);
  friend BitMatrix operator+(const BitMatrix& x, const BitMatrix& y);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  uint32_t col_mask() const { return cols_ == 32 ? ~0u : ((1u << cols_) - 1u); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint32_t> words_;
};

/// Row vector times matrix: XOR of the rows selected by the bits of x.
inline uint32_t vec_mul(uint32_t x, const BitMatrix& m) {
  uint32_t out = 0;
  while (x) {
    int r = std::countr_zero(x);
    out ^= m.row(r);
    x &= x - 1;
  }
  return out;
}

}  // namespace tvd

#endif  // TVD_BITMATRIX_H
