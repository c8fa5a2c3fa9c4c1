#include "pdgh/algebra/quad_int.hpp"

#include <sstream>
#include <stdexcept>

namespace pdgh {

Integer round_half_even(Integer num, Integer den) {
  if (den.is_zero()) throw std::domain_error("round_half_even: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // floor division; cpp_int division truncates toward zero
  Integer fl = num / den;
  Integer rem = num - fl * den;
  if (rem < 0) {
    fl -= 1;
    rem += den;
  }
  const Integer twice = 2 * rem;
  if (twice < den) return fl;
  if (twice > den) return fl + 1;
  return (fl % 2 == 0) ? fl : fl + 1;
}

bool QuadInt::is_unit() const {
  const Integer n = norm();
  return n == 1 || n == -1;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  Integer a = a_ * o.a_ + 3 * b_ * o.b_;
  Integer b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QuadInt::to_string() const {
  std::ostringstream os;
  if (b_.is_zero()) {
    os << a_;
    return os.str();
  }
  if (!a_.is_zero()) os << a_ << (b_ > 0 ? "+" : "-");
  else if (b_ < 0) os << "-";
  const Integer mag = b_ < 0 ? Integer(-b_) : b_;
  if (mag != 1) os << mag << "*";
  os << "sqrt3";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << x.to_string(); }

DivMod divmod(const QuadInt& n, const QuadInt& d) {
  if (d.is_zero()) throw std::domain_error("divmod: division by zero");
  // n/d = n*conj(d)/norm(d)
  const QuadInt num = n * d.conjugate();
  const Integer den = d.norm();
  QuadInt q(round_half_even(num.rational(), den), round_half_even(num.irrational(), den));
  QuadInt r = n - q * d;
  return {std::move(q), std::move(r)};
}

bool divides(const QuadInt& d, const QuadInt& n) {
  if (d.is_zero()) return n.is_zero();
  const QuadInt num = n * d.conjugate();
  const Integer den = d.norm();
  return Integer(num.rational() % den) == 0 && Integer(num.irrational() % den) == 0;
}

QuadInt exact_div(const QuadInt& n, const QuadInt& d) {
  if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
  const QuadInt num = n * d.conjugate();
  const Integer den = d.norm();
  if (Integer(num.rational() % den) != 0 || Integer(num.irrational() % den) != 0)
    throw std::domain_error("exact_div: " + d.to_string() + " does not divide " + n.to_string());
  return QuadInt(num.rational() / den, num.irrational() / den);
}

QuadInt unit_inverse(const QuadInt& u) {
  const Integer n = u.norm();
  if (n == 1) return u.conjugate();
  if (n == -1) return -u.conjugate();
  throw std::domain_error("unit_inverse: " + u.to_string() + " is not a unit");
}

namespace {

// |x| >= |conj(x)| exactly when a*b >= 0.
bool balanced_from_below(const QuadInt& x) {
  return x.rational() * x.irrational() >= 0;
}

QuadInt times_unit(const QuadInt& x) {  // x * (2+sqrt3)
  return QuadInt(2 * x.rational() + 3 * x.irrational(), x.rational() + 2 * x.irrational());
}

QuadInt times_unit_inverse(const QuadInt& x) {  // x * (2-sqrt3)
  return QuadInt(2 * x.rational() - 3 * x.irrational(), 2 * x.irrational() - x.rational());
}

}  // namespace

QuadInt canonical_associate(QuadInt x) {
  if (x.is_zero()) return x;
  while (!balanced_from_below(x)) x = times_unit(x);
  for (QuadInt down = times_unit_inverse(x); balanced_from_below(down); down = times_unit_inverse(x))
    x = std::move(down);
  if (x.rational() < 0 || (x.rational().is_zero() && x.irrational() < 0)) x = -x;
  return x;
}

QuadInt gcd(QuadInt x, QuadInt y) {
  if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd: both arguments are zero");
  while (!y.is_zero()) {
    QuadInt r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(std::move(x));
}

}  // namespace pdgh
