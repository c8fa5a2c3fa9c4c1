#include "pdgh/homology/frobenius.hpp"

#include <algorithm>
#include <functional>

namespace pdgh {

QuadMatrix FrobeniusM::unit() { return QuadMatrix{{1}, {0}, {0}}; }

QuadMatrix FrobeniusM::trace() { return QuadMatrix{{0, 0, 1}}; }

QuadMatrix FrobeniusM::multiplication() {
  QuadMatrix m(3, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j < 3) m(i + j, 3 * i + j) = 1;
  return m;
}

QuadMatrix FrobeniusM::comultiplication() {
  // 1 -> 1(x)x^2 + x(x)x + x^2(x)1,  x -> x(x)x^2 + x^2(x)x,  x^2 -> x^2(x)x^2
  QuadMatrix d(9, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int c = a + 2 - b;
      if (c >= 0 && c < 3) d(3 * b + c, a) = 1;
    }
  return d;
}

QuadMatrix FrobeniusM::half_genus() {
  QuadMatrix h(3, 3);
  h(1, 0) = QuadInt::sqrt3();
  h(2, 1) = QuadInt::sqrt3();
  return h;
}

QuadMatrix kronecker(const QuadMatrix& a, const QuadMatrix& b) {
  QuadMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

QuadMatrix twist_map() {
  QuadMatrix t(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(3 * j + i, 3 * i + j) = 1;
  return t;
}

bool FrobeniusReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

namespace {

std::string basis_name(std::size_t index, std::size_t factors) {
  if (factors == 0) return "1";
  static const char* names[] = {"1", "x", "x^2"};
  std::string out;
  std::size_t scale = 1;
  for (std::size_t f = 1; f < factors; ++f) scale *= 3;
  for (std::size_t f = 0; f < factors; ++f, scale /= 3) {
    if (f) out += "(x)";
    out += names[(index / scale) % 3];
  }
  return out;
}

std::size_t factors_of(std::size_t dim) {
  std::size_t f = 0;
  for (; dim > 1; dim /= 3) ++f;
  return f;
}

RelationCheck compare(std::string name, const QuadMatrix& lhs, const QuadMatrix& rhs) {
  RelationCheck check{std::move(name), true, {}};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    check.passed = false;
    check.witness = "shape mismatch";
    return check;
  }
  for (std::size_t c = 0; c < lhs.cols(); ++c)
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      if (lhs(r, c) != rhs(r, c)) {
        check.passed = false;
        check.witness = "input " + basis_name(c, factors_of(lhs.cols()));
        return check;
      }
  return check;
}

// Every nonzero entry must shift degree by exactly `shift`.
RelationCheck degree_check(std::string name, const QuadMatrix& map, int shift) {
  RelationCheck check{std::move(name), true, {}};
  const std::size_t in_factors = factors_of(map.cols());
  const std::size_t out_factors = factors_of(map.rows());
  auto total_degree = [](std::size_t index, std::size_t factors) {
    int d = 0;
    for (std::size_t f = 0; f < factors; ++f, index /= 3) d += FrobeniusM::degree(static_cast<int>(index % 3));
    return d;
  };
  for (std::size_t c = 0; c < map.cols(); ++c)
    for (std::size_t r = 0; r < map.rows(); ++r)
      if (!map(r, c).is_zero() && total_degree(r, out_factors) - total_degree(c, in_factors) != shift) {
        check.passed = false;
        check.witness = "input " + basis_name(c, in_factors);
        return check;
      }
  return check;
}

}  // namespace

FrobeniusReport verify_frobenius_relations() {
  const QuadMatrix u = FrobeniusM::unit();
  const QuadMatrix tr = FrobeniusM::trace();
  const QuadMatrix m = FrobeniusM::multiplication();
  const QuadMatrix d = FrobeniusM::comultiplication();
  const QuadMatrix h = FrobeniusM::half_genus();
  const QuadMatrix id = QuadMatrix::identity(3);
  const QuadMatrix sw = twist_map();

  FrobeniusReport r;
  auto add = [&](RelationCheck c) { r.checks.push_back(std::move(c)); };
  add(compare("h^2 = m.Delta", h * h, m * d));
  add(compare("m.(h(x)Id) = h.m", m * kronecker(h, id), h * m));
  add(compare("h.m = m.(Id(x)h)", h * m, m * kronecker(id, h)));
  add(compare("(h(x)Id).Delta = Delta.h", kronecker(h, id) * d, d * h));
  add(compare("Delta.h = (Id(x)h).Delta", d * h, kronecker(id, h) * d));
  add(compare("(Id(x)m).(Delta(x)Id) = Delta.m", kronecker(id, m) * kronecker(d, id), d * m));
  add(compare("Delta.m = (m(x)Id).(Id(x)Delta)", d * m, kronecker(m, id) * kronecker(id, d)));
  add(compare("m.(u(x)Id) = Id", m * kronecker(u, id), id));
  add(compare("m.(Id(x)u) = Id", m * kronecker(id, u), id));
  add(compare("(tr(x)Id).Delta = Id", kronecker(tr, id) * d, id));
  add(compare("(Id(x)tr).Delta = Id", kronecker(id, tr) * d, id));
  add(compare("m.(m(x)Id) = m.(Id(x)m)", m * kronecker(m, id), m * kronecker(id, m)));
  add(compare("(Delta(x)Id).Delta = (Id(x)Delta).Delta", kronecker(d, id) * d, kronecker(id, d) * d));
  add(compare("m.swap = m", m * sw, m));
  add(compare("swap.Delta = Delta", sw * d, d));
  add(degree_check("deg m = -1", m, -1));
  add(degree_check("deg Delta = -1", d, -1));
  add(degree_check("deg h = -1", h, -1));
  add(degree_check("deg u = +1", u, 1));
  add(degree_check("deg tr = +1", tr, 1));
  return r;
}

}  // namespace pdgh
