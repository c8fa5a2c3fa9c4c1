#pragma once

#include "pdgh/ribbon/ribbon_graph.hpp"

#include <vector>

namespace pdgh {

/// Flag (quarter-edge) model of a ribbon graph.
///
/// Half-edge h contributes flags 2h (its left side) and 2h+1 (its right side),
/// where "right" faces the corner arc that follows h in the rotation. Each
/// isolated vertex adds two synthetic flags after all of those.
///
///   tau2 swaps the two sides of a half-edge,
///   tau1 joins the right side of a half-edge to the left side of the next
///        half-edge around the vertex,
///   tau0 crosses the edge: it swaps sides along an untwisted edge and keeps
///        them along a twisted one. Synthetic flags are tau0-fixed.
///
/// Vertices, edges, faces and components are the orbits of <tau1,tau2>,
/// <tau0,tau2>, <tau0,tau1> and <tau0,tau1,tau2>.
struct FlagSystem {
  std::vector<int> tau0;
  std::vector<int> tau1;
  std::vector<int> tau2;
  /// Edge owning each flag, -1 for synthetic flags.
  std::vector<int> edge;
  /// Original edge names and half-edge names (end_a, end_b), used when a
  /// graph is rebuilt from this system.
  std::vector<EdgeSpec> edge_names;

  std::size_t size() const { return tau0.size(); }
};

FlagSystem flag_system(const RibbonGraph& g);

/// Number of orbits of the group generated by the selected involutions.
std::size_t orbit_count(const FlagSystem& fs, bool use0, bool use1, bool use2);

/// Rebuilds a signed rotation system from a flag system. Vertices are named
/// v0, v1, ... in order of their least flag; each rotation starts at the
/// least flag of its vertex. Edges keep their order and names.
RibbonGraph graph_from_flags(const FlagSystem& fs);

struct GraphCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t components = 0;

  friend bool operator==(const GraphCounts&, const GraphCounts&) = default;
};

GraphCounts counts(const RibbonGraph& g);

/// 2c - |V| + |E| - |F|.
int euler_genus(const RibbonGraph& g);

/// True iff the flag graph (flags joined by tau0, tau1, tau2) is bipartite.
bool is_orientable(const RibbonGraph& g);

/// Partial dual with respect to the edges in `a`: on those edges tau0 and
/// tau2 trade places.
RibbonGraph partial_dual(const RibbonGraph& g, EdgeSet a);

/// Euler-Poincare dual, the partial dual with respect to every edge.
RibbonGraph dual(const RibbonGraph& g);

/// Ribbon graph isomorphism: a bijection of flags commuting with tau0, tau1
/// and tau2. Throws GraphError above kMaxIsomorphismEdges edges.
inline constexpr std::size_t kMaxIsomorphismEdges = 10;
bool are_isomorphic(const RibbonGraph& g1, const RibbonGraph& g2);

}  // namespace pdgh
