#pragma once

// Exact integer Laurent polynomials in one and two variables.

#include "pdgh/algebra/quad_int.hpp"

#include <map>
#include <string>
#include <utility>

namespace pdgh {

/// Laurent polynomial in one variable with integer coefficients. Zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(int exponent, const Integer& coef = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  void add_term(int exponent, const Integer& coef);

  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Non-negative powers only; negative powers of a monomial with unit
  /// coefficient are allowed too. Anything else throws std::domain_error.
  LaurentPoly pow(int e) const;

  /// Terms in descending exponent order, e.g. "2*z^2 + 2*z".
  std::string to_string(const std::string& var = "z") const;

 private:
  Terms terms_;
};

/// Laurent polynomial in two named variables. The exponent pair follows the
/// variable order in names().
class BiLaurent {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Integer>;
  using Names = std::pair<std::string, std::string>;

  explicit BiLaurent(Names names = {"w", "z"}) : names_(std::move(names)) {}
  static BiLaurent constant(Names names, const Integer& c);
  static BiLaurent monomial(Names names, int e1, int e2, const Integer& coef = 1);
  /// Embeds a univariate polynomial as the first (slot 0) or second (slot 1)
  /// variable.
  static BiLaurent from_univariate(Names names, const LaurentPoly& p, int slot);

  const Names& names() const { return names_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int e1, int e2) const;
  void add_term(int e1, int e2, const Integer& coef);

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent operator-() const;
  friend BiLaurent operator+(BiLaurent x, const BiLaurent& y) { return x += y; }
  friend BiLaurent operator-(BiLaurent x, const BiLaurent& y) { return x -= y; }
  friend BiLaurent operator*(const BiLaurent& x, const BiLaurent& y);
  /// Equality requires equal variable names as well as equal terms.
  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

  /// Same rules as LaurentPoly::pow.
  BiLaurent pow(int e) const;

  /// Coefficient of first-variable power e1 as a polynomial in the second.
  LaurentPoly slice_first(int e1) const;
  /// Coefficient of second-variable power e2 as a polynomial in the first.
  LaurentPoly slice_second(int e2) const;

  /// Specialize the first variable to 1.
  LaurentPoly at_first_equal_one() const;

  /// Descending total degree, then lexicographically descending exponents in
  /// variable order, e.g. "w^2*z^2 + 2*w*z + z^2".
  std::string to_string() const;

 private:
  void check_names(const BiLaurent& o) const;

  Names names_;
  Terms terms_;
};

/// Image of a variable under substitution. With `inverse` set the image is
/// assigned to var^-1 rather than var, so var^-k maps to image^k.
struct Binding {
  BiLaurent image;
  bool inverse = false;
};

/// Substitutes images for variables of p. All images must share one variable
/// pair, which becomes the result's. Variables without a binding must be one
/// of the target variables and map to themselves. A power that would need the
/// inverse of a non-monomial image throws std::domain_error.
BiLaurent substitute(const BiLaurent& p, const std::map<std::string, Binding>& bindings);

}  // namespace pdgh
