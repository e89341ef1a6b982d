#pragma once

#include <vector>

#include "mh/enumerate.hpp"
#include "mh/point.hpp"
#include "mh/stratum.hpp"
#include "mh/types.hpp"

namespace mh {

// Orbit graph restricted to heights <= height_bound: vertices are the
// canonical solutions in the window, and vertex v is adjacent to the
// canonical form of every Vieta image of v.  Images above the bound are kept
// as frontier markers instead of edges, so truncation stays visible.
struct OrbitGraph {
  Params params;
  Int height_bound;
  std::vector<NormalPoint> vertices;  // lexicographically sorted

  static constexpr int kFrontier = -1;
  // adjacency[v][i]: vertex index of the canonical Vieta image of vertices[v]
  // in direction i, or kFrontier when that image leaves the height window.
  std::vector<std::vector<int>> adjacency;

  std::vector<int> component;        // component id per vertex, ids dense from 0
  std::vector<int> component_rep;    // per component: vertex index of its reduction representative
  std::size_t frontier_edges = 0;    // number of (vertex, direction) pairs leaving the window

  int vertex_index(const NormalPoint& q) const;  // -1 when absent
  int component_count() const { return static_cast<int>(component_rep.size()); }
};

// Builds the bounded orbit graph.  Height descent never climbs, so every
// component contains the common reduction representative of its members;
// component_rep records it.  Requires params.a > 0.
OrbitGraph orbit_graph(const Params& params, const Int& height_bound, int workers = 1);

// Component-centric view of an orbit graph, the payload of the orbits
// command: each component lists its representative, the representative's
// stratum, and all member vertices.
struct OrbitPartition {
  Params params;
  Int height_bound;
  std::size_t frontier_edges = 0;
  struct Component {
    NormalPoint representative;
    Stratum stratum = Stratum::None;
    std::vector<NormalPoint> members;  // lexicographically sorted
  };
  std::vector<Component> components;  // sorted by representative
};

OrbitPartition orbit_partition(const OrbitGraph& graph);

}  // namespace mh
