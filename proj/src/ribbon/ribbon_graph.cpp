#include "pdgh/ribbon/ribbon_graph.hpp"

#include <unordered_map>
#include <unordered_set>

namespace pdgh {

RibbonGraph::RibbonGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::unordered_map<std::string, int> half_edge;  // name -> index
  std::unordered_set<std::string> edge_names;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const EdgeSpec& e = edges_[k];
    if (!edge_names.insert(e.name).second) throw GraphError("duplicate edge '" + e.name + "'");
    if (e.end_a == e.end_b) throw GraphError("edge '" + e.name + "' joins half-edge '" + e.end_a + "' to itself");
    for (int side = 0; side < 2; ++side) {
      const std::string& h = side == 0 ? e.end_a : e.end_b;
      if (!half_edge.emplace(h, static_cast<int>(2 * k) + side).second)
        throw GraphError("half-edge '" + h + "' used by more than one edge");
    }
  }

  std::unordered_set<std::string> vertex_names;
  he_vertex_.assign(half_edge_count(), -1);
  he_position_.assign(half_edge_count(), -1);
  rotation_.resize(vertices_.size());
  arc_offset_.assign(1, 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const VertexSpec& vs = vertices_[v];
    if (!vertex_names.insert(vs.name).second) throw GraphError("duplicate vertex '" + vs.name + "'");
    for (std::size_t t = 0; t < vs.rotation.size(); ++t) {
      auto it = half_edge.find(vs.rotation[t]);
      if (it == half_edge.end())
        throw GraphError("half-edge '" + vs.rotation[t] + "' at vertex '" + vs.name + "' belongs to no edge");
      const int h = it->second;
      if (he_vertex_[h] != -1) throw GraphError("half-edge '" + vs.rotation[t] + "' appears in two rotations");
      he_vertex_[h] = static_cast<int>(v);
      he_position_[h] = static_cast<int>(t);
      rotation_[v].push_back(h);
    }
    const int arcs = vs.rotation.empty() ? 1 : static_cast<int>(vs.rotation.size());
    arc_offset_.push_back(arc_offset_.back() + arcs);
  }
  for (std::size_t h = 0; h < he_vertex_.size(); ++h)
    if (he_vertex_[h] == -1) {
      const EdgeSpec& e = edges_[h / 2];
      throw GraphError("half-edge '" + (h % 2 ? e.end_b : e.end_a) + "' of edge '" + e.name +
                       "' is attached to no vertex");
    }
}

std::pair<int, int> RibbonGraph::flanking_arcs(int half_edge) const {
  const int v = he_vertex_[half_edge];
  const int d = static_cast<int>(rotation_[v].size());
  const int t = he_position_[half_edge];
  return {arc_offset_[v] + (t + d - 1) % d, arc_offset_[v] + t};
}

std::size_t RibbonGraph::edge_index(const std::string& name) const {
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].name == name) return k;
  throw GraphError("unknown edge '" + name + "'");
}

std::size_t RibbonGraph::vertex_index(const std::string& name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].name == name) return v;
  throw GraphError("unknown vertex '" + name + "'");
}

EdgeSet RibbonGraph::edge_set(const std::vector<std::string>& names) const {
  if (edges_.size() > kMaxSubsetEdges) throw GraphError("edge subsets support at most 64 edges");
  EdgeSet s = 0;
  for (const auto& n : names) s = with_edge(s, edge_index(n));
  return s;
}

RibbonGraph RibbonGraph::with_edge_order(const std::vector<std::size_t>& order) const {
  if (order.size() != edges_.size()) throw GraphError("edge order has the wrong length");
  std::vector<bool> seen(edges_.size(), false);
  std::vector<EdgeSpec> edges;
  edges.reserve(order.size());
  for (std::size_t k : order) {
    if (k >= edges_.size() || seen[k]) throw GraphError("edge order is not a permutation");
    seen[k] = true;
    edges.push_back(edges_[k]);
  }
  return RibbonGraph(vertices_, std::move(edges));
}

void check_subset(const RibbonGraph& g, EdgeSet a) {
  if (g.edge_count() > kMaxSubsetEdges) throw GraphError("edge subsets support at most 64 edges");
  if ((a & ~full_set(g.edge_count())) != 0) throw GraphError("edge subset refers to an unknown edge");
}

}  // namespace pdgh
