#include "pdgh/algebra/quad_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace pdgh {

QuadMatrix::QuadMatrix(std::initializer_list<std::initializer_list<QuadInt>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw std::invalid_argument("QuadMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QuadMatrix QuadMatrix::identity(std::size_t n) {
  QuadMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QuadInt& QuadMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("QuadMatrix::at");
  return (*this)(r, c);
}

const QuadInt& QuadMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("QuadMatrix::at");
  return (*this)(r, c);
}

bool QuadMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

void QuadMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void QuadMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void QuadMatrix::add_row_multiple(std::size_t dst, std::size_t src, const QuadInt& factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!(*this)(src, c).is_zero()) (*this)(dst, c) += factor * (*this)(src, c);
}

void QuadMatrix::add_col_multiple(std::size_t dst, std::size_t src, const QuadInt& factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!(*this)(r, src).is_zero()) (*this)(r, dst) += factor * (*this)(r, src);
}

void QuadMatrix::scale_row(std::size_t r, const QuadInt& factor) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) *= factor;
}

QuadMatrix operator*(const QuadMatrix& x, const QuadMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("QuadMatrix: dimension mismatch in product");
  QuadMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const QuadInt& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
    }
  return out;
}

std::string QuadMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace pdgh
