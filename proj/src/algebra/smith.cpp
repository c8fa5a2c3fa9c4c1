#include "pdgh/algebra/smith.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace pdgh {

namespace {

Integer abs_norm(const QuadInt& x) {
  Integer n = x.norm();
  return n < 0 ? Integer(-n) : n;
}

struct Pos {
  std::size_t r, c;
};

// Least |norm| nonzero entry in the trailing block [t.., t..].
std::optional<Pos> min_norm_entry(const QuadMatrix& a, std::size_t t) {
  std::optional<Pos> best;
  Integer best_norm;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c).is_zero()) continue;
      Integer n = abs_norm(a(r, c));
      if (!best || n < best_norm) {
        best = Pos{r, c};
        best_norm = std::move(n);
        if (best_norm == 1) return best;
      }
    }
  return best;
}

// Least |norm| nonzero entry within row t and column t of the trailing block.
std::optional<Pos> min_norm_cross(const QuadMatrix& a, std::size_t t) {
  std::optional<Pos> best;
  Integer best_norm;
  auto consider = [&](std::size_t r, std::size_t c) {
    if (a(r, c).is_zero()) return;
    Integer n = abs_norm(a(r, c));
    if (!best || n < best_norm || (n == best_norm && std::tie(r, c) < std::tie(best->r, best->c))) {
      best = Pos{r, c};
      best_norm = std::move(n);
    }
  };
  for (std::size_t c = t; c < a.cols(); ++c) consider(t, c);
  for (std::size_t r = t + 1; r < a.rows(); ++r) consider(r, t);
  return best;
}

// Reduces `a` in place to diagonal form; left/right, when given, accumulate
// the row and column operations. Returns the nonzero diagonal.
std::vector<QuadInt> smith_core(QuadMatrix& a, QuadMatrix* left, QuadMatrix* right) {
  std::vector<QuadInt> diag;
  const std::size_t limit = std::min(a.rows(), a.cols());

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (left) left->swap_rows(i, j);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (right) right->swap_cols(i, j);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const QuadInt& f) {
    a.add_row_multiple(dst, src, f);
    if (left) left->add_row_multiple(dst, src, f);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const QuadInt& f) {
    a.add_col_multiple(dst, src, f);
    if (right) right->add_col_multiple(dst, src, f);
  };

  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = min_norm_entry(a, t);
    if (!pivot) break;
    swap_rows(t, pivot->r);
    swap_cols(t, pivot->c);

    for (;;) {
      bool cleared = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t).is_zero()) continue;
        DivMod qr = divmod(a(r, t), a(t, t));
        add_row(r, t, -qr.quotient);
        if (!qr.remainder.is_zero()) cleared = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c).is_zero()) continue;
        DivMod qr = divmod(a(t, c), a(t, t));
        add_col(c, t, -qr.quotient);
        if (!qr.remainder.is_zero()) cleared = false;
      }
      if (!cleared) {
        // a remainder of smaller norm now sits in row t or column t
        Pos p = *min_norm_cross(a, t);
        swap_rows(t, p.r);
        swap_cols(t, p.c);
        continue;
      }
      // pivot must divide the rest of the trailing block
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < a.rows() && !bad_row; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c)
          if (!divides(a(t, t), a(r, c))) {
            bad_row = r;
            break;
          }
      if (!bad_row) break;
      add_row(t, *bad_row, 1);
    }

    QuadInt canon = canonical_associate(a(t, t));
    QuadInt unit = exact_div(canon, a(t, t));
    if (unit != QuadInt(1)) {
      a.scale_row(t, unit);
      if (left) left->scale_row(t, unit);
    }
    diag.push_back(std::move(canon));
  }
  return diag;
}

}  // namespace

SmithForm smith_normal_form(const QuadMatrix& m) {
  SmithForm out;
  QuadMatrix a = m;
  out.left = QuadMatrix::identity(m.rows());
  out.right = QuadMatrix::identity(m.cols());
  out.diagonal = smith_core(a, &out.left, &out.right);
  out.rank = out.diagonal.size();
  return out;
}

void SparseQuadMatrix::add(std::size_t r, std::size_t c, const QuadInt& value) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("SparseQuadMatrix::add");
  if (value.is_zero()) return;
  Row& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (it->value.is_zero()) row.erase(it);
  } else {
    row.insert(it, Entry{static_cast<std::uint32_t>(c), value});
  }
}

QuadMatrix SparseQuadMatrix::to_dense() const {
  QuadMatrix d(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r]) d(r, e.col) = e.value;
  return d;
}

std::size_t SparseQuadMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

namespace {

// row_dst -= factor * row_src, both sorted by column.
void subtract_multiple(SparseQuadMatrix::Row& dst, const SparseQuadMatrix::Row& src, const QuadInt& factor,
                       std::vector<std::uint32_t>& new_cols) {
  SparseQuadMatrix::Row out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin();
  auto j = src.begin();
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->col < j->col)) {
      out.push_back(std::move(*i++));
    } else if (i == dst.end() || j->col < i->col) {
      out.push_back({j->col, -(factor * j->value)});
      new_cols.push_back(j->col);
      ++j;
    } else {
      QuadInt v = std::move(i->value);
      v -= factor * j->value;
      if (!v.is_zero()) out.push_back({i->col, std::move(v)});
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

const QuadInt* find_entry(const SparseQuadMatrix::Row& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseQuadMatrix::Entry& e, std::uint32_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

}  // namespace

ElementaryDivisors elementary_divisors(SparseQuadMatrix m) {
  ElementaryDivisors out;
  const std::size_t nrows = m.rows();
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols());
  for (std::size_t r = 0; r < nrows; ++r)
    for (const auto& e : m.row(r)) col_rows[e.col].push_back(static_cast<std::uint32_t>(r));

  std::vector<bool> active(nrows, true);
  std::vector<std::uint32_t> version(nrows, 0);
  using Item = std::tuple<std::size_t, std::uint32_t, std::uint32_t>;  // length, row, version
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (m.row(r).empty()) active[r] = false;
    else queue.emplace(m.row(r).size(), static_cast<std::uint32_t>(r), 0);
  }

  std::vector<std::uint32_t> new_cols;
  while (!queue.empty()) {
    auto [len, r, ver] = queue.top();
    queue.pop();
    if (!active[r] || ver != version[r]) continue;
    const auto& prow = m.row(r);
    if (prow.empty()) {
      active[r] = false;
      continue;
    }
    // unit entry whose column is least populated
    const SparseQuadMatrix::Entry* pivot = nullptr;
    for (const auto& e : prow)
      if (e.value.is_unit() && (!pivot || col_rows[e.col].size() < col_rows[pivot->col].size())) pivot = &e;
    if (!pivot) continue;  // revisited if a later elimination changes this row

    const std::uint32_t pcol = pivot->col;
    const QuadInt inv = unit_inverse(pivot->value);
    active[r] = false;
    const SparseQuadMatrix::Row pivot_row = prow;
    std::vector<std::uint32_t> touched;
    touched.swap(col_rows[pcol]);
    for (std::uint32_t other : touched) {
      if (!active[other]) continue;
      const QuadInt* v = find_entry(m.row(other), pcol);
      if (!v) continue;
      const QuadInt factor = *v * inv;
      new_cols.clear();
      subtract_multiple(m.row(other), pivot_row, factor, new_cols);
      for (std::uint32_t c : new_cols) col_rows[c].push_back(other);
      ++version[other];
      if (m.row(other).empty()) active[other] = false;
      else queue.emplace(m.row(other).size(), other, version[other]);
    }
    ++out.rank;
  }

  // dense finish on whatever has no unit entries left
  std::vector<std::uint32_t> rest_rows;
  std::vector<std::uint32_t> rest_cols;
  for (std::size_t r = 0; r < nrows; ++r)
    if (active[r] && !m.row(r).empty()) {
      rest_rows.push_back(static_cast<std::uint32_t>(r));
      for (const auto& e : m.row(r)) rest_cols.push_back(e.col);
    }
  if (rest_rows.empty()) return out;
  std::sort(rest_cols.begin(), rest_cols.end());
  rest_cols.erase(std::unique(rest_cols.begin(), rest_cols.end()), rest_cols.end());
  QuadMatrix dense(rest_rows.size(), rest_cols.size());
  for (std::size_t i = 0; i < rest_rows.size(); ++i)
    for (const auto& e : m.row(rest_rows[i])) {
      auto c = std::lower_bound(rest_cols.begin(), rest_cols.end(), e.col) - rest_cols.begin();
      dense(i, static_cast<std::size_t>(c)) = e.value;
    }
  for (auto& d : smith_core(dense, nullptr, nullptr)) {
    ++out.rank;
    if (!d.is_unit()) out.nonunits.push_back(std::move(d));
  }
  return out;
}

std::size_t fraction_field_rank(QuadMatrix m) {
  std::size_t rank = 0;
  std::size_t col = 0;
  for (; rank < m.rows() && col < m.cols(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    const QuadInt pivot = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const QuadInt f = m(r, col);
      m.scale_row(r, pivot);
      m.add_row_multiple(r, rank, -f);
    }
    ++rank;
  }
  return rank;
}

}  // namespace pdgh
