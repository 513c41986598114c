#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spanner/types.hpp"

namespace spanner {

// Undirected edge in canonical order u < v, positive integer weight.
struct Edge {
  Vertex u{};
  Vertex v{};
  Weight w{};

  bool operator==(const Edge& o) const { return u == o.u && v == o.v && w == o.w; }
};

struct AdjEntry {
  Vertex to{};
  Weight w{};
  EdgeId id{};
};

// Immutable undirected graph with vertex ids 0..n-1. No self-loops, no
// parallel edges, all weights >= 1. Edges are kept sorted by (u, v) and the
// edge id is the index into edges().
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(Vertex n, std::vector<Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  const std::vector<AdjEntry>& neighbors(Vertex u) const { return adj_[u]; }
  const std::vector<std::vector<AdjEntry>>& adjacency() const { return adj_; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  bool operator==(const WeightedGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  Vertex n_{0};
  std::vector<Edge> edges_;
  std::vector<std::vector<AdjEntry>> adj_;
};

// Maximum edge weight; throws std::invalid_argument("no edges") on an
// edgeless graph.
Weight w_max(const WeightedGraph& g);

// Edge-list text format: first non-comment line "n m", then m lines "u v w"
// with 0-based ids and integer w >= 1. Lines starting with '#' are comments.
WeightedGraph parse_edge_list(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);

// Canonical serialization: "n m" then edges sorted by (u, v), no comments.
void serialize_edge_list(const WeightedGraph& g, std::ostream& out);
std::string graph_to_string(const WeightedGraph& g);
void write_graph_file(const WeightedGraph& g, const std::string& path);

}  // namespace spanner
