#pragma once

// Exact arithmetic in the ring Z[sqrt3] = { a + b*sqrt3 : a, b in Z }.
//
// Z[sqrt3] is norm-Euclidean: dividing exactly in Q(sqrt3) and rounding both
// coordinates to the nearest integer leaves a remainder whose |norm| is at
// most 3/4 of the divisor's. Everything above this layer (Smith normal form,
// torsion ideals, homology) relies on that.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

namespace pdgh {

using Integer = boost::multiprecision::cpp_int;

/// Round num/den to the nearest integer, ties to even. den must be nonzero.
Integer round_half_even(Integer num, Integer den);

class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadInt sqrt3() { return QuadInt(0, 1); }
  /// The fundamental unit 2 + sqrt3.
  static QuadInt fundamental_unit() { return QuadInt(2, 1); }

  const Integer& rational() const { return a_; }
  const Integer& irrational() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// a^2 - 3 b^2.
  Integer norm() const { return a_ * a_ - 3 * b_ * b_; }
  bool is_unit() const;
  /// a - b*sqrt3.
  QuadInt conjugate() const { return QuadInt(a_, -b_); }

  QuadInt operator-() const { return QuadInt(-a_, -b_); }
  QuadInt& operator+=(const QuadInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadInt& operator*=(const QuadInt& o);

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
  friend bool operator==(const QuadInt&, const QuadInt&) = default;

  std::string to_string() const;

 private:
  Integer a_{0};
  Integer b_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

struct DivMod {
  QuadInt quotient;
  QuadInt remainder;
};

/// Euclidean division: n = q*d + r with |norm(r)| < |norm(d)|.
/// Throws std::domain_error when d is zero.
DivMod divmod(const QuadInt& n, const QuadInt& d);

/// True iff d divides n (d == 0 divides only 0).
bool divides(const QuadInt& d, const QuadInt& n);

/// n / d for a d known to divide n. Throws std::domain_error otherwise.
QuadInt exact_div(const QuadInt& n, const QuadInt& d);

/// Inverse of a unit. Throws std::domain_error for non-units.
QuadInt unit_inverse(const QuadInt& u);

/// Canonical representative of the associate class of x.
///
/// Among g * (+-1) * (2+sqrt3)^n this picks the element with
/// 1 <= |g / conj(g)| < (2+sqrt3)^2, then fixes the sign so the rational part
/// is positive (or the sqrt3 part, when the rational part is zero).
/// Zero maps to zero.
QuadInt canonical_associate(QuadInt x);

/// Canonical generator of the ideal (x, y). Requires x, y not both zero.
QuadInt gcd(QuadInt x, QuadInt y);

}  // namespace pdgh
