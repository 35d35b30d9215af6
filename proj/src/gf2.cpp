#include "mopf/gf2.hpp"

#include <algorithm>
#include <cassert>

namespace mopf {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * ((cols + 63) / 64), 0) {}

GF2Matrix GF2Matrix::from_columns(std::size_t rows, const std::vector<std::vector<std::size_t>>& columns) {
  GF2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r : columns[c]) m.set(r, c);
  return m;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value)
    row(r)[c / 64] |= bit;
  else
    row(r)[c / 64] &= ~bit;
}

bool GF2Matrix::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> GF2Matrix::column_support(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) out.push_back(r);
  return out;
}

std::size_t GF2Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> w = words_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && (w[pivot * stride_ + word] & bit) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      std::swap_ranges(w.begin() + pivot * stride_, w.begin() + (pivot + 1) * stride_, w.begin() + rank * stride_);
    const std::uint64_t* prow = w.data() + rank * stride_;
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* target = w.data() + r * stride_;
      if (target[word] & bit)
        for (std::size_t k = word; k < stride_; ++k) target[k] ^= prow[k];
    }
    ++rank;
  }
  return rank;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  GF2Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* target = out.row(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = rhs.row(k);
      for (std::size_t w = 0; w < out.stride_; ++w) target[w] ^= src[w];
    }
  }
  return out;
}

}  // namespace mopf
