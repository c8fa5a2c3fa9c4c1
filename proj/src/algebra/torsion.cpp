#include "pdgh/algebra/torsion.hpp"

#include <stdexcept>

namespace pdgh {

namespace {

struct ExtGcd {
  Integer g, x, y;  // x*a + y*b = g >= 0
};

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer floor_mod(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

TorsionIdeal::Hnf ideal_hnf(const QuadInt& generator) {
  if (generator.is_zero()) throw std::domain_error("ideal_hnf: zero generator");
  // lattice rows: g = (a, b), g*sqrt3 = (3b, a)
  const Integer& a = generator.rational();
  const Integer& b = generator.irrational();
  const Integer c = 3 * b;
  const ExtGcd eg = ext_gcd(a, c);
  const Integer& p = eg.g;
  Integer r = eg.x * b + eg.y * a;
  // second row after eliminating the first column: (-c/p)*(a,b) + (a/p)*(c,a)
  Integer s = (-(c / p)) * b + (a / p) * a;
  if (s < 0) s = -s;
  r = floor_mod(r, s);
  return TorsionIdeal::Hnf{{{p, r}, {Integer(0), s}}};
}

TorsionIdeal::TorsionIdeal(const QuadInt& generator)
    : generator_(canonical_associate(generator)), hnf_(ideal_hnf(generator_)) {
  size_ = hnf_[0][0] * hnf_[1][1];
}

std::string TorsionIdeal::name() const { return "Z" + size_.str(); }

}  // namespace pdgh
