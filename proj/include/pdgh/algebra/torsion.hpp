#pragma once

#include "pdgh/algebra/quad_int.hpp"

#include <array>
#include <string>

namespace pdgh {

/// A nonzero principal ideal (g) of Z[sqrt3], viewed as the torsion factor
/// Z[sqrt3]/(g).
///
/// The ideal is identified by the Hermite normal form of its lattice in the
/// basis (1, sqrt3): rows (p, r) and (0, s) with p, s > 0 and 0 <= r < s.
/// Two ideals are equal iff their HNFs are equal, whichever associate of the
/// generator was used to build them.
class TorsionIdeal {
 public:
  using Hnf = std::array<std::array<Integer, 2>, 2>;

  /// Throws std::domain_error for a zero generator.
  explicit TorsionIdeal(const QuadInt& generator);

  /// Canonical associate of the generator.
  const QuadInt& generator() const { return generator_; }
  const Hnf& hnf() const { return hnf_; }
  /// |Z[sqrt3]/(g)| = |norm(g)| = det(hnf).
  const Integer& quotient_size() const { return size_; }

  /// "Z3" style display name.
  std::string name() const;

  friend bool operator==(const TorsionIdeal& x, const TorsionIdeal& y) { return x.hnf_ == y.hnf_; }
  friend bool operator<(const TorsionIdeal& x, const TorsionIdeal& y) { return x.hnf_ < y.hnf_; }

 private:
  QuadInt generator_;
  Hnf hnf_;
  Integer size_;
};

/// HNF of the lattice generated by g and g*sqrt3.
TorsionIdeal::Hnf ideal_hnf(const QuadInt& generator);

}  // namespace pdgh
