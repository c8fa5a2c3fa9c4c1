#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdgh {

enum class Twist { untwisted, twisted };

/// Subset of the edges of a graph, bit i standing for the i-th edge in the
/// graph's edge order. Subset operations therefore cap graphs at 64 edges.
using EdgeSet = std::uint64_t;
inline constexpr std::size_t kMaxSubsetEdges = 64;

inline bool contains(EdgeSet s, std::size_t e) { return (s >> e) & 1u; }
inline EdgeSet with_edge(EdgeSet s, std::size_t e) { return s | (EdgeSet{1} << e); }
inline int subset_size(EdgeSet s) { return __builtin_popcountll(s); }
inline EdgeSet full_set(std::size_t edges) { return edges >= 64 ? ~EdgeSet{0} : (EdgeSet{1} << edges) - 1; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VertexSpec {
  std::string name;
  std::vector<std::string> rotation;  // half-edge names in cyclic order

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct EdgeSpec {
  std::string name;
  std::string end_a;
  std::string end_b;
  Twist twist = Twist::untwisted;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Signed rotation system: every vertex lists its half-edges in cyclic order
/// and every edge joins two half-edges, untwisted or twisted.
///
/// Half-edges are indexed internally by edge: edge k owns half-edges 2k
/// (end_a) and 2k+1 (end_b). The edge list order is the canonical edge order.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  /// Validates and indexes the graph; throws GraphError on duplicate, missing
  /// or dangling half-edges and on duplicate names.
  RibbonGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

  const std::vector<VertexSpec>& vertices() const { return vertices_; }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t half_edge_count() const { return 2 * edges_.size(); }

  /// Rotation of vertex v as half-edge indices.
  const std::vector<int>& rotation(std::size_t v) const { return rotation_[v]; }
  int vertex_of(int half_edge) const { return he_vertex_[half_edge]; }
  int position_of(int half_edge) const { return he_position_[half_edge]; }
  static int edge_of(int half_edge) { return half_edge / 2; }
  static int partner(int half_edge) { return half_edge ^ 1; }

  /// Corner arcs: vertex v of degree d >= 1 owns arcs arc_offset(v) + t for
  /// t in [0, d), arc t lying between rotation positions t and t+1; an
  /// isolated vertex owns a single arc.
  int arc_offset(std::size_t v) const { return arc_offset_[v]; }
  int arc_count() const { return arc_offset_.back(); }
  /// Arcs on either side of a half-edge: (before, after).
  std::pair<int, int> flanking_arcs(int half_edge) const;

  std::size_t edge_index(const std::string& name) const;    // throws GraphError
  std::size_t vertex_index(const std::string& name) const;  // throws GraphError
  /// Subset from edge names; throws GraphError on unknown names.
  EdgeSet edge_set(const std::vector<std::string>& names) const;

  /// Same graph with edges listed in a new order: new edge i is old edge
  /// order[i].
  RibbonGraph with_edge_order(const std::vector<std::size_t>& order) const;

  /// Identical presentation (names, rotations, edge order). For equality up
  /// to relabelling use are_isomorphic.
  friend bool operator==(const RibbonGraph& x, const RibbonGraph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

 private:
  std::vector<VertexSpec> vertices_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> he_vertex_;
  std::vector<int> he_position_;
  std::vector<int> arc_offset_;
};

/// Throws GraphError if a subset refers to edges beyond the graph.
void check_subset(const RibbonGraph& g, EdgeSet a);

}  // namespace pdgh
