#include "mh/graph.hpp"

#include <algorithm>
#include <atomic>

#include "mh/moves.hpp"
#include "mh/parallel.hpp"
#include "mh/reduce.hpp"

namespace mh {
namespace {

// Plain union-find; the graphs stay small enough that rank tricks would be
// noise, but path halving keeps repeated finds cheap.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) {
    for (int i = 0; i < size; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int u, int v) { parent[find(u)] = find(v); }
};

}  // namespace

int OrbitGraph::vertex_index(const NormalPoint& q) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), q);
  if (it == vertices.end() || !(*it == q)) return -1;
  return static_cast<int>(it - vertices.begin());
}

OrbitGraph orbit_graph(const Params& params, const Int& height_bound, int workers) {
  SolutionSet solutions = enumerate_solutions(params, height_bound, workers);

  OrbitGraph graph{params, height_bound, std::move(solutions.points), {}, {}, {}, 0};
  const int vertex_count = static_cast<int>(graph.vertices.size());
  graph.adjacency.assign(vertex_count, std::vector<int>(params.n, OrbitGraph::kFrontier));

  std::atomic<std::size_t> frontier{0};
  parallel_for(static_cast<std::size_t>(vertex_count), workers, [&](std::size_t v) {
    const Coords& x = graph.vertices[v].coords();
    for (int i = 0; i < params.n; ++i) {
      Coords image = x;
      image[i] = vieta_coordinate(params, x, i);
      if (height(image) > height_bound) {
        frontier.fetch_add(1, std::memory_order_relaxed);
        continue;  // leaves the window: stays a frontier marker
      }
      const Normalized canonical = normalize(params, Point(params, std::move(image)));
      const int target = graph.vertex_index(canonical.point);
      if (target < 0)
        throw Error("orbit graph image " + format_coords(canonical.point.coords()) +
                    " missing from the bounded solution set");
      graph.adjacency[v][i] = target;
    }
  });
  graph.frontier_edges = frontier.load();

  UnionFind components(vertex_count);
  for (int v = 0; v < vertex_count; ++v)
    for (int target : graph.adjacency[v])
      if (target >= 0) components.unite(v, target);

  // Dense component ids in order of smallest member; the representative of
  // each component is where the height descent of that member lands.
  graph.component.assign(vertex_count, -1);
  for (int v = 0; v < vertex_count; ++v) {
    const int root = components.find(v);
    if (graph.component[root] < 0) {
      const int id = static_cast<int>(graph.component_rep.size());
      graph.component[root] = id;
      ReduceOptions options;
      options.keep_trace = false;
      const ReductionResult reduced = reduce(params, Point(params, graph.vertices[v].coords()), options);
      const int rep = graph.vertex_index(reduced.representative);
      if (rep < 0 || components.find(rep) != root)
        throw Error("reduction representative " + format_coords(reduced.representative.coords()) +
                    " escaped its bounded component");
      graph.component_rep.push_back(rep);
    }
    graph.component[v] = graph.component[root];
  }
  return graph;
}

OrbitPartition orbit_partition(const OrbitGraph& graph) {
  OrbitPartition partition{graph.params, graph.height_bound, graph.frontier_edges, {}};
  partition.components.reserve(graph.component_rep.size());
  for (std::size_t id = 0; id < graph.component_rep.size(); ++id) {
    const NormalPoint& rep = graph.vertices[graph.component_rep[id]];
    partition.components.push_back(OrbitPartition::Component{
        rep, stratum_member(graph.params, rep), {}});
  }
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    partition.components[graph.component[v]].members.push_back(graph.vertices[v]);
  std::sort(partition.components.begin(), partition.components.end(),
            [](const OrbitPartition::Component& lhs, const OrbitPartition::Component& rhs) {
              return lhs.representative < rhs.representative;
            });
  return partition;
}

}  // namespace mh
