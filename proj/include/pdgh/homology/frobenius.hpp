#pragma once

// Structure constants of M = Z[sqrt3][x]/(x^3) with unit, multiplication,
// trace (the x^2 coefficient), the comultiplication it induces, and the
// half-genus map h = multiplication by sqrt3*x. Basis index i stands for x^i
// and carries degree 1 - i. All maps are matrices acting on column vectors;
// tensor factors are ordered left to right, index 3*i + j for x^i (x) x^j.
//
// N = Z[sqrt3][y]/(y^2) only ever receives a unit in the first slot, so it is
// described by its basis degrees alone.

#include "pdgh/algebra/quad_matrix.hpp"

#include <string>
#include <vector>

namespace pdgh {

struct FrobeniusM {
  static constexpr int kDim = 3;
  static int degree(int basis) { return 1 - basis; }

  static QuadMatrix unit();            // 3 x 1
  static QuadMatrix trace();           // 1 x 3
  static QuadMatrix multiplication();  // 3 x 9
  static QuadMatrix comultiplication();// 9 x 3
  static QuadMatrix half_genus();      // 3 x 3
};

struct AlgebraN {
  static constexpr int kDim = 2;
  /// 1 has degree 0, y has degree 1.
  static int degree(int basis) { return basis; }
};

QuadMatrix kronecker(const QuadMatrix& a, const QuadMatrix& b);

/// Swap of the two factors of M (x) M.
QuadMatrix twist_map();

struct RelationCheck {
  std::string name;
  bool passed = true;
  /// On failure: the first basis input where the two sides differ.
  std::string witness;
};

struct FrobeniusReport {
  std::vector<RelationCheck> checks;
  bool ok() const;
};

/// h^2 = m Delta, the puncture moves, the Frobenius relation, (co)unit,
/// (co)associativity, (co)commutativity and the degrees of every map.
FrobeniusReport verify_frobenius_relations();

}  // namespace pdgh
