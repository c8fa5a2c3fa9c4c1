#include "pdgh/ribbon/flags.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace pdgh {

namespace {

int left_flag(int half_edge) { return 2 * half_edge; }
int right_flag(int half_edge) { return 2 * half_edge + 1; }

}  // namespace

FlagSystem flag_system(const RibbonGraph& g) {
  const int half_edges = static_cast<int>(g.half_edge_count());
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.rotation(v).empty()) ++isolated;
  const std::size_t n = 2 * static_cast<std::size_t>(half_edges) + 2 * isolated;

  FlagSystem fs;
  fs.tau0.resize(n);
  fs.tau1.resize(n);
  fs.tau2.resize(n);
  fs.edge.assign(n, -1);
  fs.edge_names = g.edges();

  for (int h = 0; h < half_edges; ++h) {
    fs.tau2[left_flag(h)] = right_flag(h);
    fs.tau2[right_flag(h)] = left_flag(h);
    fs.edge[left_flag(h)] = fs.edge[right_flag(h)] = RibbonGraph::edge_of(h);
  }
  int synthetic = 2 * half_edges;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) {
      const int s0 = synthetic++, s1 = synthetic++;
      fs.tau0[s0] = s0;
      fs.tau0[s1] = s1;
      fs.tau1[s0] = fs.tau2[s0] = s1;
      fs.tau1[s1] = fs.tau2[s1] = s0;
      continue;
    }
    for (std::size_t t = 0; t < rot.size(); ++t) {
      const int here = right_flag(rot[t]);
      const int next = left_flag(rot[(t + 1) % rot.size()]);
      fs.tau1[here] = next;
      fs.tau1[next] = here;
    }
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const int a = static_cast<int>(2 * k), b = a + 1;
    std::array<std::pair<int, int>, 2> pairs;
    if (g.edges()[k].twist == Twist::untwisted)
      pairs = {{{left_flag(a), right_flag(b)}, {right_flag(a), left_flag(b)}}};
    else
      pairs = {{{left_flag(a), left_flag(b)}, {right_flag(a), right_flag(b)}}};
    for (auto [x, y] : pairs) {
      fs.tau0[x] = y;
      fs.tau0[y] = x;
    }
  }
  return fs;
}

std::size_t orbit_count(const FlagSystem& fs, bool use0, bool use1, bool use2) {
  const std::size_t n = fs.size();
  std::vector<bool> seen(n, false);
  std::vector<int> stack;
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++orbits;
    seen[start] = true;
    stack.assign(1, static_cast<int>(start));
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int next : {use0 ? fs.tau0[f] : f, use1 ? fs.tau1[f] : f, use2 ? fs.tau2[f] : f})
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
    }
  }
  return orbits;
}

RibbonGraph graph_from_flags(const FlagSystem& fs) {
  const std::size_t n = fs.size();
  const std::size_t edges = fs.edge_names.size();
  // per half-edge slot (2k + end): its left/right flags once assigned
  std::vector<int> slot_left(2 * edges, -1), slot_right(2 * edges, -1);
  std::vector<bool> seen(n, false);
  std::vector<VertexSpec> vertices;

  auto slot_of = [&](int flag, int other) {
    const int k = fs.edge[flag];
    // the half-edge holding the edge's first flag is end_a
    const bool is_a = flag == 4 * k || other == 4 * k;
    return 2 * k + (is_a ? 0 : 1);
  };
  auto slot_name = [&](int slot) {
    const EdgeSpec& e = fs.edge_names[slot / 2];
    return slot % 2 ? e.end_b : e.end_a;
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSpec vs{"v" + std::to_string(vertices.size()), {}};
    if (fs.edge[start] < 0) {
      seen[start] = seen[fs.tau2[start]] = true;
      vertices.push_back(std::move(vs));
      continue;
    }
    int cur = static_cast<int>(start);
    do {
      const int other = fs.tau2[cur];
      seen[cur] = seen[other] = true;
      const int slot = slot_of(cur, other);
      slot_left[slot] = cur;
      slot_right[slot] = other;
      vs.rotation.push_back(slot_name(slot));
      cur = fs.tau1[other];
    } while (cur != static_cast<int>(start));
    vertices.push_back(std::move(vs));
  }

  std::vector<EdgeSpec> out_edges = fs.edge_names;
  for (std::size_t k = 0; k < edges; ++k) {
    const int across = fs.tau0[slot_left[2 * k]];
    out_edges[k].twist = across == slot_right[2 * k + 1] ? Twist::untwisted : Twist::twisted;
  }
  return RibbonGraph(std::move(vertices), std::move(out_edges));
}

GraphCounts counts(const RibbonGraph& g) {
  const FlagSystem fs = flag_system(g);
  return {g.vertex_count(), g.edge_count(), orbit_count(fs, true, true, false), orbit_count(fs, true, true, true)};
}

int euler_genus(const RibbonGraph& g) {
  const GraphCounts c = counts(g);
  return 2 * static_cast<int>(c.components) - static_cast<int>(c.vertices) + static_cast<int>(c.edges) -
         static_cast<int>(c.faces);
}

bool is_orientable(const RibbonGraph& g) {
  const FlagSystem fs = flag_system(g);
  std::vector<int> colour(fs.size(), -1);
  std::vector<int> stack;
  for (std::size_t start = 0; start < fs.size(); ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    stack.assign(1, static_cast<int>(start));
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int next : {fs.tau0[f], fs.tau1[f], fs.tau2[f]}) {
        if (next == f) continue;  // fixed points carry no adjacency
        if (colour[next] < 0) {
          colour[next] = 1 - colour[f];
          stack.push_back(next);
        } else if (colour[next] == colour[f]) {
          return false;
        }
      }
    }
  }
  return true;
}

RibbonGraph partial_dual(const RibbonGraph& g, EdgeSet a) {
  check_subset(g, a);
  FlagSystem fs = flag_system(g);
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (fs.edge[f] >= 0 && contains(a, static_cast<std::size_t>(fs.edge[f]))) std::swap(fs.tau0[f], fs.tau2[f]);
  return graph_from_flags(fs);
}

RibbonGraph dual(const RibbonGraph& g) { return partial_dual(g, full_set(g.edge_count())); }

namespace {

using Certificate = std::vector<int>;

// Relabels the component of `start` in discovery order and records the
// involutions in the new labels.
Certificate certificate_from(const FlagSystem& fs, int start) {
  std::vector<int> label(fs.size(), -1);
  std::vector<int> order{start};
  label[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int f = order[i];
    for (int next : {fs.tau0[f], fs.tau1[f], fs.tau2[f]})
      if (label[next] < 0) {
        label[next] = static_cast<int>(order.size());
        order.push_back(next);
      }
  }
  Certificate cert;
  cert.reserve(3 * order.size());
  for (int f : order) {
    cert.push_back(label[fs.tau0[f]]);
    cert.push_back(label[fs.tau1[f]]);
    cert.push_back(label[fs.tau2[f]]);
  }
  return cert;
}

std::vector<Certificate> canonical_form(const RibbonGraph& g) {
  if (g.edge_count() > kMaxIsomorphismEdges)
    throw GraphError("isomorphism test supports at most " + std::to_string(kMaxIsomorphismEdges) + " edges");
  const FlagSystem fs = flag_system(g);
  std::vector<int> component(fs.size(), -1);
  std::vector<std::vector<int>> members;
  for (std::size_t s = 0; s < fs.size(); ++s) {
    if (component[s] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{static_cast<int>(s)};
    component[s] = id;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      members[id].push_back(f);
      for (int next : {fs.tau0[f], fs.tau1[f], fs.tau2[f]})
        if (component[next] < 0) {
          component[next] = id;
          stack.push_back(next);
        }
    }
  }
  std::vector<Certificate> form;
  for (const auto& flags : members) {
    Certificate best;
    for (int start : flags) {
      Certificate c = certificate_from(fs, start);
      if (best.empty() || c < best) best = std::move(c);
    }
    form.push_back(std::move(best));
  }
  std::sort(form.begin(), form.end());
  return form;
}

}  // namespace

bool are_isomorphic(const RibbonGraph& g1, const RibbonGraph& g2) {
  const auto c1 = canonical_form(g1);
  const auto c2 = canonical_form(g2);
  return c1 == c2;
}

}  // namespace pdgh
