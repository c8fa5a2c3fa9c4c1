#include "pdgh/ribbon/circles.hpp"

#include <algorithm>
#include <numeric>

namespace pdgh {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

CirclePartition circle_partition(const RibbonGraph& g, EdgeSet a) {
  check_subset(g, a);
  const int flags = static_cast<int>(2 * g.half_edge_count());
  DisjointSets sets(static_cast<std::size_t>(flags) + g.vertex_count());
  std::vector<int> owner(static_cast<std::size_t>(g.arc_count()), -1);  // arc -> union-find node

  auto left = [](int h) { return 2 * h; };
  auto right = [](int h) { return 2 * h + 1; };

  std::vector<int> cuts;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    const int d = static_cast<int>(rot.size());
    const int base = g.arc_offset(v);
    cuts.clear();
    for (int t = 0; t < d; ++t)
      if (contains(a, static_cast<std::size_t>(RibbonGraph::edge_of(rot[t])))) cuts.push_back(t);
    if (cuts.empty()) {
      const int node = flags + static_cast<int>(v);
      for (int t = 0; t < std::max(d, 1); ++t) owner[base + t] = node;
      continue;
    }
    const int m = static_cast<int>(cuts.size());
    for (int i = 0; i < m; ++i) {
      const int p = cuts[i];
      const int q = cuts[(i + 1) % m];
      const int node = right(rot[p]);
      sets.unite(node, left(rot[q]));
      const int span = m == 1 ? d : (q - p + d) % d;
      for (int s = 0; s < span; ++s) owner[base + (p + s) % d] = node;
    }
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!contains(a, k)) continue;
    const int ha = static_cast<int>(2 * k), hb = ha + 1;
    if (g.edges()[k].twist == Twist::untwisted) {
      sets.unite(left(ha), right(hb));
      sets.unite(right(ha), left(hb));
    } else {
      sets.unite(left(ha), left(hb));
      sets.unite(right(ha), right(hb));
    }
  }

  CirclePartition out;
  out.block_of.assign(owner.size(), -1);
  std::vector<int> root_block(static_cast<std::size_t>(flags) + g.vertex_count(), -1);
  // arcs are visited in increasing order, so blocks come out ordered by least arc
  for (std::size_t arc = 0; arc < owner.size(); ++arc) {
    const int root = sets.find(owner[arc]);
    if (root_block[root] < 0) {
      root_block[root] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.block_of[arc] = root_block[root];
    out.blocks[root_block[root]].push_back(static_cast<int>(arc));
  }
  return out;
}

std::size_t face_count(const RibbonGraph& g, EdgeSet a) { return circle_partition(g, a).size(); }

}  // namespace pdgh
