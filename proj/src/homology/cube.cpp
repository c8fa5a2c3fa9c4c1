#include "pdgh/homology/cube.hpp"

#include <algorithm>

namespace pdgh {

int sign_exponent(EdgeSet a, std::size_t e) {
  if (e >= kMaxSubsetEdges) throw GraphError("edge index out of range");
  if (contains(a, e)) throw GraphError("edge " + std::to_string(e) + " is already in the source subset");
  return subset_size(a & ((EdgeSet{1} << e) - 1));
}

int sign_exponent(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) throw GraphError("bitstrings '" + a + "' and '" + b + "' differ in length");
  int flipped = -1;
  int ones_before = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    for (char c : {a[t], b[t]})
      if (c != '0' && c != '1') throw GraphError("bitstring characters must be 0 or 1");
    if (a[t] == b[t]) {
      if (flipped < 0 && a[t] == '1') ++ones_before;
      continue;
    }
    if (a[t] == '1' || flipped >= 0) throw GraphError("'" + b + "' is not '" + a + "' with one 0 turned into 1");
    flipped = static_cast<int>(t);
  }
  if (flipped < 0) throw GraphError("'" + b + "' is not '" + a + "' with one 0 turned into 1");
  return ones_before;
}

const char* to_string(FaceMapKind kind) {
  switch (kind) {
    case FaceMapKind::merge: return "m";
    case FaceMapKind::split: return "Delta";
    case FaceMapKind::translate: return "h";
  }
  return "?";
}

FaceMap face_map(const RibbonGraph& g, std::size_t edge, const CirclePartition& from, const CirclePartition& to) {
  std::vector<int> arcs;
  for (int h : {static_cast<int>(2 * edge), static_cast<int>(2 * edge + 1)}) {
    const auto [before, after] = g.flanking_arcs(h);
    arcs.push_back(before);
    arcs.push_back(after);
  }
  auto touched = [&](const CirclePartition& p) {
    std::vector<int> blocks;
    for (int arc : arcs) blocks.push_back(p.block_of[arc]);
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return blocks;
  };

  FaceMap f;
  f.source = touched(from);
  f.target = touched(to);
  if (f.source.size() == 2 && f.target.size() == 1) f.kind = FaceMapKind::merge;
  else if (f.source.size() == 1 && f.target.size() == 2) f.kind = FaceMapKind::split;
  else if (f.source.size() == 1 && f.target.size() == 1) f.kind = FaceMapKind::translate;
  else
    throw CubeError("edge " + g.edges()[edge].name + " touches " + std::to_string(f.source.size()) + " -> " +
                    std::to_string(f.target.size()) + " circles");

  // untouched circles must reappear with identical arc sets
  std::size_t t = 0;
  for (std::size_t s = 0; s < from.size(); ++s) {
    if (std::binary_search(f.source.begin(), f.source.end(), static_cast<int>(s))) continue;
    while (t < to.size() && std::binary_search(f.target.begin(), f.target.end(), static_cast<int>(t))) ++t;
    if (t == to.size() || from.blocks[s] != to.blocks[t])
      throw CubeError("untouched circle " + std::to_string(s) + " has no match across edge " + g.edges()[edge].name);
    f.identity.emplace_back(static_cast<int>(s), static_cast<int>(t));
    ++t;
  }
  while (t < to.size() && std::binary_search(f.target.begin(), f.target.end(), static_cast<int>(t))) ++t;
  if (t != to.size()) throw CubeError("unmatched target circle across edge " + g.edges()[edge].name);
  return f;
}

std::vector<CirclePartition> all_circle_partitions(const RibbonGraph& g) {
  if (g.edge_count() >= kMaxSubsetEdges) throw GraphError("too many edges for subset enumeration");
  const EdgeSet subsets = EdgeSet{1} << g.edge_count();
  std::vector<CirclePartition> out;
  out.reserve(subsets);
  for (EdgeSet a = 0; a < subsets; ++a) out.push_back(circle_partition(g, a));
  return out;
}

std::vector<EdgeMapSpec> cube_edges(const RibbonGraph& g) { return cube_edges(g, all_circle_partitions(g)); }

std::vector<EdgeMapSpec> cube_edges(const RibbonGraph& g, const std::vector<CirclePartition>& partitions) {
  const std::size_t n = g.edge_count();
  const EdgeSet full = full_set(n);
  std::vector<EdgeMapSpec> out;
  for (EdgeSet a = 0; a < partitions.size(); ++a)
    for (std::size_t e = 0; e < n; ++e) {
      if (contains(a, e)) continue;
      EdgeMapSpec s;
      s.from = a;
      s.edge = e;
      s.sign_exponent = sign_exponent(a, e);
      const EdgeSet b = with_edge(a, e);
      s.v = face_map(g, e, partitions[a], partitions[b]);
      s.w = face_map(g, e, partitions[full ^ a], partitions[full ^ b]);
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace pdgh
