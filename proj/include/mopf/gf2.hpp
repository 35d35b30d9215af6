#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mopf {

/// Dense matrix over the two-element field, rows packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  /// Builds a rows x cols matrix whose column c has ones at columns[c].
  static GF2Matrix from_columns(std::size_t rows, const std::vector<std::vector<std::size_t>>& columns);
  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

  bool is_zero() const;
  /// Row indices with a one in column c.
  std::vector<std::size_t> column_support(std::size_t c) const;

  /// Rank by word-parallel Gaussian elimination.
  std::size_t rank() const;

  /// Product *this * rhs; requires cols() == rhs.rows().
  GF2Matrix operator*(const GF2Matrix& rhs) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::uint64_t* row(std::size_t r) { return words_.data() + r * stride_; }
  const std::uint64_t* row(std::size_t r) const { return words_.data() + r * stride_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t gf2_rank(const GF2Matrix& m) { return m.rank(); }

}  // namespace mopf
