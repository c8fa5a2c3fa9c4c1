#include "pdgh/ribbon/constructions.hpp"

#include <iterator>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace pdgh {

namespace {

std::string fresh(const std::string& name, std::unordered_set<std::string>& taken) {
  std::string out = name;
  while (taken.count(out)) out += "'";
  taken.insert(out);
  return out;
}

void check_attachment(const RibbonGraph& g, Attachment at, const char* which) {
  if (at.vertex >= g.vertex_count())
    throw GraphError(std::string(which) + ": vertex index " + std::to_string(at.vertex) + " out of range");
  if (at.gap > g.rotation(at.vertex).size())
    throw GraphError(std::string(which) + ": gap " + std::to_string(at.gap) + " out of range for vertex '" +
                     g.vertices()[at.vertex].name + "'");
}

}  // namespace

RibbonGraph disjoint_union(const RibbonGraph& g1, const RibbonGraph& g2) {
  std::unordered_set<std::string> vertex_names, edge_names, half_names;
  for (const auto& v : g1.vertices()) vertex_names.insert(v.name);
  for (const auto& e : g1.edges()) {
    edge_names.insert(e.name);
    half_names.insert(e.end_a);
    half_names.insert(e.end_b);
  }

  std::unordered_map<std::string, std::string> half_rename;
  std::vector<EdgeSpec> edges = g1.edges();
  for (const auto& e : g2.edges()) {
    EdgeSpec r = e;
    r.name = fresh(e.name, edge_names);
    r.end_a = half_rename[e.end_a] = fresh(e.end_a, half_names);
    r.end_b = half_rename[e.end_b] = fresh(e.end_b, half_names);
    edges.push_back(std::move(r));
  }
  std::vector<VertexSpec> vertices = g1.vertices();
  for (const auto& v : g2.vertices()) {
    VertexSpec r{fresh(v.name, vertex_names), {}};
    for (const auto& h : v.rotation) r.rotation.push_back(half_rename.at(h));
    vertices.push_back(std::move(r));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph ribbon_join(const RibbonGraph& g1, Attachment at1, const RibbonGraph& g2, Attachment at2) {
  check_attachment(g1, at1, "ribbon_join");
  check_attachment(g2, at2, "ribbon_join");
  const RibbonGraph u = disjoint_union(g1, g2);
  const std::size_t v2 = g1.vertex_count() + at2.vertex;

  std::vector<VertexSpec> vertices;
  for (std::size_t v = 0; v < u.vertex_count(); ++v) {
    if (v == v2) continue;
    VertexSpec vs = u.vertices()[v];
    if (v == at1.vertex) {
      const auto& other = u.vertices()[v2].rotation;
      std::vector<std::string> spliced;
      for (std::size_t i = 0; i < other.size(); ++i) spliced.push_back(other[(at2.gap + i) % other.size()]);
      vs.rotation.insert(vs.rotation.begin() + static_cast<std::ptrdiff_t>(at1.gap), spliced.begin(),
                         spliced.end());
    }
    vertices.push_back(std::move(vs));
  }
  return RibbonGraph(std::move(vertices), u.edges());
}

RibbonGraph bar_amalgamation(const RibbonGraph& g1, Attachment at1, const RibbonGraph& g2, Attachment at2,
                             Twist twist) {
  check_attachment(g1, at1, "bar_amalgamation");
  check_attachment(g2, at2, "bar_amalgamation");
  const RibbonGraph u = disjoint_union(g1, g2);

  std::unordered_set<std::string> edge_names, half_names;
  for (const auto& e : u.edges()) {
    edge_names.insert(e.name);
    half_names.insert(e.end_a);
    half_names.insert(e.end_b);
  }
  EdgeSpec bar{fresh("bar", edge_names), fresh("bar.a", half_names), fresh("bar.b", half_names), twist};

  std::vector<VertexSpec> vertices = u.vertices();
  auto& r1 = vertices[at1.vertex].rotation;
  r1.insert(r1.begin() + static_cast<std::ptrdiff_t>(at1.gap), bar.end_a);
  auto& r2 = vertices[g1.vertex_count() + at2.vertex].rotation;
  r2.insert(r2.begin() + static_cast<std::ptrdiff_t>(at2.gap), bar.end_b);

  std::vector<EdgeSpec> edges = u.edges();
  edges.push_back(std::move(bar));
  return RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace pdgh
