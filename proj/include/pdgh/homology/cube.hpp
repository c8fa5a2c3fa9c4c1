#pragma once

// Edges of the partial-dual cube. Every edge A -> B = A + {e} carries a sign
// (-1)^m, the unit insertion into N at position 0, a V-part acting on the
// boundary circles of (V, A) and a W-part acting on those of (V, A^c).

#include "pdgh/ribbon/circles.hpp"
#include "pdgh/ribbon/ribbon_graph.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdgh {

/// Number of edges of A that come before e in the edge order. Throws
/// GraphError if e is already in A.
int sign_exponent(EdgeSet a, std::size_t e);

/// Bitstring form: character t is edge t. B must be A with exactly one 0
/// turned into a 1, otherwise GraphError.
int sign_exponent(const std::string& a, const std::string& b);

enum class FaceMapKind { merge, split, translate };

const char* to_string(FaceMapKind kind);

/// How one family of boundary circles changes along a cube edge. Circles are
/// indices into the source and target CirclePartitions.
struct FaceMap {
  FaceMapKind kind = FaceMapKind::translate;
  std::vector<int> source;  // touched source circles, ascending
  std::vector<int> target;  // touched target circles, ascending
  /// Untouched circles: (source, target) pairs with equal arc sets.
  std::vector<std::pair<int, int>> identity;
};

/// Raised when circle matching along an edge does not fit m, Delta or h.
class CubeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Classifies the change from `from` to `to` when the edge with the given
/// half-edges is added or removed.
FaceMap face_map(const RibbonGraph& g, std::size_t edge, const CirclePartition& from, const CirclePartition& to);

struct EdgeMapSpec {
  EdgeSet from = 0;
  std::size_t edge = 0;
  int sign_exponent = 0;
  FaceMap v;  // F(A) -> F(B)
  FaceMap w;  // F(A^c) -> F(B^c)

  EdgeSet to() const { return with_edge(from, edge); }
};

/// Circle partitions of (V, A) for every subset A, indexed by A.
std::vector<CirclePartition> all_circle_partitions(const RibbonGraph& g);

/// All |E| 2^(|E|-1) cube edges, ordered by source subset then edge.
std::vector<EdgeMapSpec> cube_edges(const RibbonGraph& g);

/// Same, reusing partitions from all_circle_partitions.
std::vector<EdgeMapSpec> cube_edges(const RibbonGraph& g, const std::vector<CirclePartition>& partitions);

}  // namespace pdgh
