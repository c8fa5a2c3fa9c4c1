#pragma once

#include "pdgh/ribbon/ribbon_graph.hpp"

#include <vector>

namespace pdgh {

/// Boundary circles of the spanning subgraph (V(G), A), each labelled by the
/// corner arcs of the full graph G that it runs along. The arc set depends
/// only on G, so circles of different subsets can be matched by their arcs.
struct CirclePartition {
  /// Blocks sorted internally and ordered by least arc.
  std::vector<std::vector<int>> blocks;
  /// Block index of every arc.
  std::vector<int> block_of;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const CirclePartition&, const CirclePartition&) = default;
};

/// Traces the boundary of (V(G), A). Along a vertex, each stretch between
/// consecutive A half-edges collects every arc it passes, including the arcs
/// next to half-edges outside A. Throws GraphError for unknown edges.
CirclePartition circle_partition(const RibbonGraph& g, EdgeSet a);

/// |F(A)|, the number of boundary circles of (V(G), A).
std::size_t face_count(const RibbonGraph& g, EdgeSet a);

}  // namespace pdgh
