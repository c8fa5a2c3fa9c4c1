#pragma once

// The bigraded cochain complex C^i = sum_{|A|=i} N^{|A|} (x) M^{F(A)} (x) M^{F(A^c)} {-2i}.
//
// A basis monomial at cube vertex A is a word in {1, y} of length |A| (bit t
// set = y at position t) and one x-power per circle, F(A) circles first and
// then F(A^c), each family ordered by least corner arc. The x-powers are
// packed base 3 with the first circle least significant. Its bidegree is
// j = number of y letters, k = sum of M-degrees + 2|A|.
//
// The differential preserves (j, k), so the complex is stored as one small
// complex per bidegree. Within a bidegree the basis at level i is ordered by
// A, then the N-word, then the x-power code.

#include "pdgh/algebra/smith.hpp"
#include "pdgh/homology/cube.hpp"
#include "pdgh/ribbon/ribbon_graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdgh {

inline constexpr std::size_t kDefaultHomologyCap = 6;

struct BasisElement {
  EdgeSet subset = 0;
  std::uint32_t nword = 0;
  std::uint32_t mcode = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

struct BidegreeComplex {
  int j = 0;
  int k = 0;
  /// basis[i] lists the basis of C^i_{(j,k)}; levels run 0..|E|.
  std::vector<std::vector<BasisElement>> basis;
  /// coboundary[i] has one row per basis element of C^i holding its image in
  /// C^{i+1}: the transpose of the matrix of the coboundary.
  std::vector<SparseQuadMatrix> coboundary;

  std::size_t dimension(std::size_t i) const { return i < basis.size() ? basis[i].size() : 0; }
};

struct CochainComplex {
  std::size_t edges = 0;
  /// F(A) and F(A^c) for each subset A.
  std::vector<int> faces;
  std::vector<int> dual_faces;
  std::map<std::pair<int, int>, BidegreeComplex> blocks;

  /// Total dimension of C^i over all bidegrees.
  std::size_t dimension(std::size_t i) const;
};

/// Throws CapError (from the polynomial module) above max_edges; 0 means the
/// default cap of 6.
CochainComplex build_complex(const RibbonGraph& g, std::size_t max_edges = 0);

/// Readable form of a basis element, e.g. "A=10 N=y M=(x,1 | x^2)".
std::string describe(const CochainComplex& c, const BasisElement& b);

struct D2Witness {
  std::size_t level = 0;  // i of the failing composite C^i -> C^{i+2}
  int j = 0;
  int k = 0;
  std::string element;
};

/// Checks that every composite of two coboundaries vanishes exactly. Returns
/// nothing on success, otherwise the first basis element where it does not.
std::optional<D2Witness> find_d2_violation(const CochainComplex& c);

inline bool verify_d2_zero(const CochainComplex& c) { return !find_d2_violation(c).has_value(); }

}  // namespace pdgh
