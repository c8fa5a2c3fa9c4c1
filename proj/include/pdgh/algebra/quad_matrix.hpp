#pragma once

#include "pdgh/algebra/quad_int.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pdgh {

/// Dense row-major matrix over Z[sqrt3] with fixed dimensions.
class QuadMatrix {
 public:
  QuadMatrix() = default;
  QuadMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QuadMatrix(std::initializer_list<std::initializer_list<QuadInt>> init);

  static QuadMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Bounds-checked access; throws std::out_of_range.
  QuadInt& at(std::size_t r, std::size_t c);
  const QuadInt& at(std::size_t r, std::size_t c) const;

  QuadInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QuadInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const QuadInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const QuadInt& factor);
  void scale_row(std::size_t r, const QuadInt& factor);

  friend QuadMatrix operator*(const QuadMatrix& x, const QuadMatrix& y);
  friend bool operator==(const QuadMatrix&, const QuadMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuadInt> data_;
};

}  // namespace pdgh
