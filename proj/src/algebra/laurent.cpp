#include "pdgh/algebra/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pdgh {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Integer& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms.erase(it);
  }
}

// "coef*var^e" pieces; an empty monomial string means the constant term.
void write_term(std::ostringstream& os, bool first, const Integer& coef, const std::string& mono) {
  const bool negative = coef < 0;
  const Integer mag = negative ? Integer(-coef) : coef;
  if (first) os << (negative ? "-" : "");
  else os << (negative ? " - " : " + ");
  if (mono.empty()) os << mag;
  else if (mag == 1) os << mono;
  else os << mag << "*" << mono;
}

std::string power_string(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

template <class Poly>
Poly generic_pow(const Poly& base, int e, const Poly& one) {
  if (e < 0) {
    if (base.terms().size() != 1) throw std::domain_error("pow: negative power of a multi-term polynomial");
    const auto& coef = base.terms().begin()->second;
    if (coef != 1 && coef != -1) throw std::domain_error("pow: negative power of a non-unit monomial");
  }
  Poly result = one;
  Poly b = base;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  while (n) {
    if (n & 1u) result = result * b;
    n >>= 1u;
    if (n) b = b * b;
  }
  return result;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coef) {
  LaurentPoly p;
  p.add_term(exponent, coef);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Integer& coef) { accumulate(terms_, exponent, coef); }

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly p;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) p.add_term(ex + ey, cx * cy);
  return p;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    LaurentPoly inv;
    if (terms_.size() == 1) {
      const auto& [ex, c] = *terms_.begin();
      if (c == 1 || c == -1) inv.add_term(-ex, c);
    }
    if (inv.is_zero()) throw std::domain_error("pow: negative power of a non-invertible polynomial");
    return generic_pow(inv, -e, LaurentPoly(1));
  }
  return generic_pow(*this, e, LaurentPoly(1));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    write_term(os, first, it->second, power_string(var, it->first));
    first = false;
  }
  return os.str();
}

BiLaurent BiLaurent::constant(Names names, const Integer& c) {
  BiLaurent p(std::move(names));
  p.add_term(0, 0, c);
  return p;
}

BiLaurent BiLaurent::monomial(Names names, int e1, int e2, const Integer& coef) {
  BiLaurent p(std::move(names));
  p.add_term(e1, e2, coef);
  return p;
}

BiLaurent BiLaurent::from_univariate(Names names, const LaurentPoly& poly, int slot) {
  BiLaurent p(std::move(names));
  for (const auto& [e, c] : poly.terms()) {
    if (slot == 0) p.add_term(e, 0, c);
    else p.add_term(0, e, c);
  }
  return p;
}

Integer BiLaurent::coefficient(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiLaurent::add_term(int e1, int e2, const Integer& coef) { accumulate(terms_, Exponents{e1, e2}, coef); }

void BiLaurent::check_names(const BiLaurent& o) const {
  if (names_ != o.names_)
    throw std::invalid_argument("BiLaurent: variable mismatch (" + names_.first + "," + names_.second + ") vs (" +
                                o.names_.first + "," + o.names_.second + ")");
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  check_names(o);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  check_names(o);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent p(names_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

BiLaurent operator*(const BiLaurent& x, const BiLaurent& y) {
  x.check_names(y);
  BiLaurent p(x.names_);
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) p.add_term(ex.first + ey.first, ex.second + ey.second, cx * cy);
  return p;
}

BiLaurent BiLaurent::pow(int e) const {
  if (e < 0) {
    BiLaurent inv(names_);
    if (terms_.size() == 1) {
      const auto& [ex, c] = *terms_.begin();
      if (c == 1 || c == -1) inv.add_term(-ex.first, -ex.second, c);
    }
    if (inv.is_zero()) throw std::domain_error("pow: negative power of a non-invertible polynomial");
    return generic_pow(inv, -e, constant(names_, 1));
  }
  return generic_pow(*this, e, constant(names_, 1));
}

LaurentPoly BiLaurent::slice_first(int e1) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_)
    if (e.first == e1) p.add_term(e.second, c);
  return p;
}

LaurentPoly BiLaurent::slice_second(int e2) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_)
    if (e.second == e2) p.add_term(e.first, c);
  return p;
}

LaurentPoly BiLaurent::at_first_equal_one() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e.second, c);
  return p;
}

std::string BiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second;
    const int dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    std::string mono = power_string(names_.first, e.first);
    const std::string second = power_string(names_.second, e.second);
    if (!second.empty()) mono = mono.empty() ? second : mono + "*" + second;
    write_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

BiLaurent substitute(const BiLaurent& p, const std::map<std::string, Binding>& bindings) {
  BiLaurent::Names target = p.names();
  if (!bindings.empty()) target = bindings.begin()->second.image.names();
  for (const auto& [var, b] : bindings)
    if (b.image.names() != target) throw std::invalid_argument("substitute: bindings use different variables");

  // image of var^e for each source variable
  auto image_power = [&](const std::string& var, int e) -> BiLaurent {
    auto it = bindings.find(var);
    if (it == bindings.end()) {
      if (var == target.first) return BiLaurent::monomial(target, e, 0);
      if (var == target.second) return BiLaurent::monomial(target, 0, e);
      throw std::invalid_argument("substitute: no binding for variable " + var);
    }
    const Binding& b = it->second;
    try {
      return b.image.pow(b.inverse ? -e : e);
    } catch (const std::domain_error&) {
      throw std::domain_error("substitute: " + var + "^" + std::to_string(e) +
                              " needs the inverse of a multi-term image");
    }
  };

  std::map<int, BiLaurent> first_cache;
  std::map<int, BiLaurent> second_cache;
  BiLaurent out(target);
  for (const auto& [e, c] : p.terms()) {
    auto f = first_cache.find(e.first);
    if (f == first_cache.end()) f = first_cache.emplace(e.first, image_power(p.names().first, e.first)).first;
    auto s = second_cache.find(e.second);
    if (s == second_cache.end()) s = second_cache.emplace(e.second, image_power(p.names().second, e.second)).first;
    out += BiLaurent::constant(target, c) * f->second * s->second;
  }
  return out;
}

}  // namespace pdgh
