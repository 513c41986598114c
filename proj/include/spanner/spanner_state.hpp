#pragma once

#include <unordered_map>
#include <vector>

#include "spanner/graph.hpp"
#include "spanner/paths.hpp"
#include "spanner/types.hpp"

namespace spanner {

// A subgraph H of a fixed base graph G, represented as an edge subset.
// Insertions are monotone; edges are never removed. Distance queries are
// served by per-source shortest-path runs memoized until the next insertion.
// Single-writer: not safe for concurrent mutation or mixed read/write.
class SpannerState {
 public:
  explicit SpannerState(const WeightedGraph& base);

  static SpannerState full(const WeightedGraph& base);
  static SpannerState from_edges(const WeightedGraph& base,
                                 const std::vector<EdgeId>& ids);
  // Builds the subset by matching h's edges inside base; an edge of h that
  // does not exist in base with the same weight raises SubgraphError.
  static SpannerState from_subgraph(const WeightedGraph& base,
                                    const WeightedGraph& h);

  const WeightedGraph& base() const { return *base_; }
  std::size_t edge_count() const { return count_; }
  bool contains(EdgeId id) const { return present_[id] != 0; }
  bool contains(Vertex u, Vertex v) const;

  // Returns true when the edge was newly inserted.
  bool insert(EdgeId id);

  std::vector<EdgeId> edge_ids() const;
  WeightedGraph to_graph() const;

  const std::vector<AdjEntry>& neighbors(Vertex u) const { return adj_[u]; }

  // Shortest-path distances inside H from s; the row stays valid until the
  // next insertion.
  const std::vector<Distance>& distances_from(Vertex s) const;
  Distance distance(Vertex u, Vertex v) const { return distances_from(u)[v]; }

 private:
  const WeightedGraph* base_{nullptr};
  std::vector<char> present_;
  std::size_t count_{0};
  std::vector<std::vector<AdjEntry>> adj_;
  mutable std::unordered_map<Vertex, std::vector<Distance>> cache_;
};

}  // namespace spanner
