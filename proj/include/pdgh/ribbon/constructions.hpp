#pragma once

#include "pdgh/ribbon/ribbon_graph.hpp"

#include <cstddef>

namespace pdgh {

/// Vertex and rotation gap of a graph. Gap t sits just before rotation
/// position t; gap 0 and gap degree are the same place.
struct Attachment {
  std::size_t vertex = 0;
  std::size_t gap = 0;
};

/// g1 followed by g2. Names from g2 that clash with names in g1 get a "'"
/// appended until unique. Edge order: g1's edges, then g2's.
RibbonGraph disjoint_union(const RibbonGraph& g1, const RibbonGraph& g2);

/// Glues the vertex-disks at1.vertex and at2.vertex along the chosen
/// boundary arcs: g2's rotation, read from gap at2.gap, is spliced into g1's
/// rotation at gap at1.gap. Throws GraphError on a bad vertex or gap.
RibbonGraph ribbon_join(const RibbonGraph& g1, Attachment at1, const RibbonGraph& g2, Attachment at2);

/// Adds a new edge from gap at1 in g1 to gap at2 in g2. The new edge comes
/// last in the edge order. Throws GraphError on a bad vertex or gap.
RibbonGraph bar_amalgamation(const RibbonGraph& g1, Attachment at1, const RibbonGraph& g2, Attachment at2,
                             Twist twist);

}  // namespace pdgh
