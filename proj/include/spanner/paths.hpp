#pragma once

#include <vector>

#include "spanner/graph.hpp"
#include "spanner/types.hpp"

namespace spanner {

// Single-source shortest paths with the deterministic predecessor rule:
// among equal-distance predecessors the smallest vertex id wins, so the
// induced shortest path between any two vertices is unique and reproducible.
struct SsspResult {
  std::vector<Distance> dist;
  std::vector<Vertex> parent;  // -1 for the source and unreachable vertices
};

SsspResult sssp(const WeightedGraph& g, Vertex source);

// A shortest path x = v0, v1, ..., vt = y together with prefix weights;
// prefix[i] is the weight of the subpath v0..vi. Subpaths of shortest paths
// are shortest, so dist_G(v_a, v_b) = prefix[b] - prefix[a].
struct PathInG {
  std::vector<Vertex> vertices;
  std::vector<Distance> prefix;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Distance total_weight() const { return prefix.empty() ? 0 : prefix.back(); }
  Weight edge_weight(std::size_t i) const { return prefix[i + 1] - prefix[i]; }
  Distance dist_between(std::size_t a, std::size_t b) const {
    return prefix[b] - prefix[a];
  }

  bool operator==(const PathInG& o) const { return vertices == o.vertices; }
};

// Canonical shortest path under the smallest-id predecessor rule; throws
// std::invalid_argument("unreachable") for disconnected pairs.
PathInG shortest_path(const WeightedGraph& g, Vertex x, Vertex y);
PathInG shortest_path_from_tree(const WeightedGraph& g, const SsspResult& tree,
                                Vertex x, Vertex y);

// Builds a path from an explicit vertex sequence, validating adjacency.
PathInG path_from_vertices(const WeightedGraph& g, const std::vector<Vertex>& vs);

// Symmetric all-pairs distance table with zero diagonal.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(Vertex n) : n_(n), d_(std::size_t(n) * n, kInfDistance) {
    for (Vertex v = 0; v < n; ++v) set(v, v, 0);
  }

  Vertex size() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return d_[std::size_t(u) * n_ + v]; }
  void set(Vertex u, Vertex v, Distance x) { d_[std::size_t(u) * n_ + v] = x; }
  void set_row(Vertex u, const std::vector<Distance>& row) {
    std::copy(row.begin(), row.end(), d_.begin() + std::size_t(u) * n_);
  }

 private:
  Vertex n_{0};
  std::vector<Distance> d_;
};

// Exact all-pairs distances; per-source runs are independent and are spread
// over threads when the machine has them.
DistanceTable apsp(const WeightedGraph& g);

// Drops every edge whose endpoints are strictly closer through the rest of
// the graph; edges whose weight equals the endpoint distance stay. The
// result has identical distances for all pairs and is idempotent.
WeightedGraph preprocess(const WeightedGraph& g);

}  // namespace spanner
