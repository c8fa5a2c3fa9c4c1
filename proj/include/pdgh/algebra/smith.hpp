#pragma once

#include "pdgh/algebra/quad_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pdgh {

struct SmithForm {
  /// Nonzero diagonal entries of left*m*right, as canonical associates, each
  /// dividing the next.
  std::vector<QuadInt> diagonal;
  std::size_t rank = 0;
  QuadMatrix left;   // rows x rows, invertible over Z[sqrt3]
  QuadMatrix right;  // cols x cols, invertible over Z[sqrt3]
};

/// Smith normal form over Z[sqrt3]. Pivots on the entry of least nonzero
/// |norm|, ties broken by (row, col).
SmithForm smith_normal_form(const QuadMatrix& m);

/// Sparse matrix over Z[sqrt3], one sorted entry list per row.
class SparseQuadMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    QuadInt value;
  };
  using Row = std::vector<Entry>;

  SparseQuadMatrix() = default;
  SparseQuadMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds value to entry (r, c). Entries may be added in any order.
  void add(std::size_t r, std::size_t c, const QuadInt& value);
  const Row& row(std::size_t r) const { return rows_[r]; }
  Row& row(std::size_t r) { return rows_[r]; }

  QuadMatrix to_dense() const;
  std::size_t nonzeros() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Rank and the non-unit invariant factors (canonical associates, sorted by
/// the divisibility chain) of a matrix.
struct ElementaryDivisors {
  std::size_t rank = 0;
  std::vector<QuadInt> nonunits;
};

/// Same invariants as smith_normal_form without transforms: eliminates unit
/// pivots sparsely first, then finishes the residual block densely.
ElementaryDivisors elementary_divisors(SparseQuadMatrix m);

/// Rank over the fraction field Q(sqrt3) by fraction-free Gaussian elimination.
/// Independent of the Smith machinery; used as a cross-check.
std::size_t fraction_field_rank(QuadMatrix m);

}  // namespace pdgh
