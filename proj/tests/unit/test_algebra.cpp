#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pdgh/algebra/laurent.hpp"
#include "pdgh/algebra/quad_int.hpp"
#include "pdgh/algebra/quad_matrix.hpp"
#include "pdgh/algebra/smith.hpp"
#include "pdgh/algebra/torsion.hpp"

#include <random>

using namespace pdgh;

namespace {

QuadInt random_quad(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return QuadInt(Integer(d(rng)), Integer(d(rng)));
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

QuadInt unit_power(int k) {
  QuadInt u(1);
  const QuadInt e = k >= 0 ? QuadInt::fundamental_unit() : QuadInt(2, -1);
  for (int t = 0; t < (k >= 0 ? k : -k); ++t) u *= e;
  return u;
}

// Membership of x in the lattice with rows (p, r), (0, s).
bool in_lattice(const TorsionIdeal::Hnf& h, const QuadInt& x) {
  const Integer& p = h[0][0];
  const Integer& r = h[0][1];
  const Integer& s = h[1][1];
  if (Integer(x.rational() % p) != 0) return false;
  const Integer t = x.rational() / p;
  return Integer((x.irrational() - t * r) % s) == 0;
}

}  // namespace

TEST_CASE("quad int arithmetic") {
  const QuadInt a(3, 2), b(-1, 4);
  CHECK(a + b == QuadInt(2, 6));
  CHECK(a - b == QuadInt(4, -2));
  CHECK(a * b == QuadInt(-3 + 24, 12 - 2));
  CHECK(a.norm() == 9 - 12);
  CHECK(a.conjugate() == QuadInt(3, -2));
  CHECK(QuadInt::sqrt3() * QuadInt::sqrt3() == QuadInt(3));
  CHECK(QuadInt::fundamental_unit().is_unit());
  CHECK_FALSE(QuadInt::sqrt3().is_unit());
  CHECK(QuadInt(1, 1).to_string() == "1+sqrt3");
  CHECK(QuadInt(0, -2).to_string() == "-2*sqrt3");
  CHECK(QuadInt(0).to_string() == "0");
}

TEST_CASE("divmod against multiplication") {
  std::mt19937 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const QuadInt n = random_quad(rng, 60);
    QuadInt d = random_quad(rng, 25);
    if (d.is_zero()) d = QuadInt(1, 1);
    const DivMod qr = divmod(n, d);
    CHECK(qr.quotient * d + qr.remainder == n);
    CHECK(abs_int(qr.remainder.norm()) < abs_int(d.norm()));
  }
  CHECK_THROWS_AS(divmod(QuadInt(1), QuadInt(0)), std::domain_error);
}

TEST_CASE("divisibility and exact division") {
  const QuadInt s = QuadInt::sqrt3();
  CHECK(divides(s, QuadInt(3)));
  CHECK(divides(s, QuadInt(3, 5)));
  CHECK_FALSE(divides(s, QuadInt(1, 1)));
  CHECK(exact_div(QuadInt(3), s) == s);
  CHECK_THROWS_AS(exact_div(QuadInt(2), s), std::domain_error);
  CHECK(unit_inverse(QuadInt::fundamental_unit()) == QuadInt(2, -1));
  CHECK_THROWS_AS(unit_inverse(QuadInt(2)), std::domain_error);
}

TEST_CASE("canonical associate is a class invariant") {
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    QuadInt x = random_quad(rng, 30);
    if (x.is_zero()) continue;
    const QuadInt c = canonical_associate(x);
    CHECK(canonical_associate(c) == c);
    CHECK(divides(c, x));
    CHECK(divides(x, c));
    for (int k : {-3, -1, 1, 2, 4}) {
      CHECK(canonical_associate(x * unit_power(k)) == c);
      CHECK(canonical_associate(-x * unit_power(k)) == c);
    }
  }
  CHECK(canonical_associate(QuadInt(0)) == QuadInt(0));
  CHECK(canonical_associate(QuadInt(-5)) == QuadInt(5));
}

TEST_CASE("gcd") {
  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    const QuadInt x = random_quad(rng, 20), y = random_quad(rng, 20), z = random_quad(rng, 6);
    if (x.is_zero() && y.is_zero()) continue;
    const QuadInt g = gcd(x, y);
    CHECK(divides(g, x));
    CHECK(divides(g, y));
    if (!z.is_zero()) CHECK(gcd(x * z, y * z) == canonical_associate(g * z));
  }
  CHECK(gcd(QuadInt(3), QuadInt(0, 1)) == canonical_associate(QuadInt::sqrt3()));
  CHECK_THROWS(gcd(QuadInt(0), QuadInt(0)));
}

TEST_CASE("torsion ideals") {
  const TorsionIdeal t(QuadInt::sqrt3());
  CHECK(t.quotient_size() == 3);
  CHECK(t.name() == "Z3");
  CHECK(TorsionIdeal(QuadInt::sqrt3() * unit_power(3)) == t);
  CHECK(TorsionIdeal(-QuadInt(3, 2) * unit_power(-2)) == TorsionIdeal(QuadInt(3, 2)));
  CHECK_FALSE(TorsionIdeal(QuadInt(2)) == t);
  CHECK_THROWS_AS(TorsionIdeal(QuadInt(0)), std::domain_error);

  std::mt19937 rng(23);
  for (int n = 0; n < 200; ++n) {
    const QuadInt g = random_quad(rng, 15);
    if (g.is_zero()) continue;
    const TorsionIdeal i(g);
    const auto& h = i.hnf();
    CHECK(h[0][0] * h[1][1] == abs_int(g.norm()));
    CHECK(h[1][0] == 0);
    CHECK(h[0][1] >= 0);
    CHECK(h[0][1] < h[1][1]);
    // the HNF rows generate exactly (g): both generators lie in the lattice
    // and the index matches |norm|
    CHECK(in_lattice(h, g));
    CHECK(in_lattice(h, g * QuadInt::sqrt3()));
    CHECK(in_lattice(ideal_hnf(g * QuadInt(2, 1)), g));
  }
}

TEST_CASE("matrix basics") {
  QuadMatrix m{{1, 2}, {3, 4}};
  CHECK(m * QuadMatrix::identity(2) == m);
  CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
  m.add_row_multiple(1, 0, QuadInt(-3));
  CHECK(m(1, 0) == QuadInt(0));
  CHECK(m(1, 1) == QuadInt(-2));
}

TEST_CASE("smith normal form reconstructs the matrix") {
  std::mt19937 rng(29);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    QuadMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (rng() % 3) m(r, c) = random_quad(rng, 4);
    const SmithForm s = smith_normal_form(m);
    const QuadMatrix d = s.left * m * s.right;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        if (r == c && r < s.rank) CHECK(canonical_associate(d(r, c)) == s.diagonal[r]);
        else CHECK(d(r, c).is_zero());
      }
    CHECK(s.rank == fraction_field_rank(m));
    for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) CHECK(divides(s.diagonal[k], s.diagonal[k + 1]));

    SparseQuadMatrix sp(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (!m(r, c).is_zero()) sp.add(r, c, m(r, c));
    CHECK(sp.to_dense() == m);
    const ElementaryDivisors e = elementary_divisors(sp);
    CHECK(e.rank == s.rank);
    std::vector<QuadInt> nonunits;
    for (const auto& x : s.diagonal)
      if (!x.is_unit()) nonunits.push_back(x);
    CHECK(e.nonunits == nonunits);
  }
}

TEST_CASE("smith normal form of sqrt3 torsion") {
  const QuadInt s = QuadInt::sqrt3();
  const SmithForm f = smith_normal_form(QuadMatrix{{s, 0}, {0, QuadInt(3)}});
  REQUIRE(f.diagonal.size() == 2);
  CHECK(f.diagonal[0] == canonical_associate(s));
  CHECK(f.diagonal[1] == QuadInt(3));
  CHECK(smith_normal_form(QuadMatrix(2, 3)).rank == 0);
}

TEST_CASE("laurent polynomials") {
  const LaurentPoly z = LaurentPoly::monomial(1);
  const LaurentPoly p = z * z * 2 + z * 2;
  CHECK(p.to_string() == "2*z^2 + 2*z");
  CHECK((z + 1).pow(2) == z * z + z * 2 + 1);
  CHECK(z.pow(-2) == LaurentPoly::monomial(-2));
  CHECK_THROWS_AS((z + 1).pow(-1), std::domain_error);
  CHECK((p - p).is_zero());

  const BiLaurent::Names wz{"w", "z"};
  const BiLaurent g = BiLaurent::monomial(wz, 0, 2) + BiLaurent::monomial(wz, 1, 1, 2) + BiLaurent::monomial(wz, 2, 2);
  CHECK(g.to_string() == "w^2*z^2 + 2*w*z + z^2");
  CHECK(g.at_first_equal_one() == p);
  CHECK(g.slice_first(1) == z * 2);
  CHECK_THROWS_AS(g + BiLaurent::monomial({"p", "q"}, 1, 1), std::invalid_argument);
}

TEST_CASE("substitution against direct expansion") {
  const BiLaurent::Names wz{"w", "z"}, pq{"p", "q"};
  // e = w z^-2 + 3 w^2 z^-1, with w -> p + q, z^-1 -> q^-1 + 1
  const BiLaurent e = BiLaurent::monomial(wz, 1, -2) + BiLaurent::monomial(wz, 2, -1, 3);
  const BiLaurent w_img = BiLaurent::monomial(pq, 1, 0) + BiLaurent::monomial(pq, 0, 1);
  const BiLaurent zi_img = BiLaurent::monomial(pq, 0, -1) + BiLaurent::constant(pq, 1);
  const BiLaurent got = substitute(e, {{"w", Binding{w_img, false}}, {"z", Binding{zi_img, true}}});
  BiLaurent expected = w_img * zi_img * zi_img + BiLaurent::constant(pq, 3) * w_img * w_img * zi_img;
  CHECK(got == expected);
  // inverse of a non-monomial image is refused
  CHECK_THROWS_AS(substitute(BiLaurent::monomial(wz, 0, 1), {{"w", Binding{w_img, false}}, {"z", Binding{zi_img, true}}}),
                  std::domain_error);
}
