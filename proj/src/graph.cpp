#include "spanner/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace spanner {

WeightedGraph::WeightedGraph(Vertex n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) throw std::invalid_argument("vertex id out of range");
    if (e.w < 1) throw std::invalid_argument("edge weight must be >= 1");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw std::invalid_argument("parallel edge");
  }
  adj_.assign(n_, {});
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj_[e.u].push_back({e.v, e.w, id});
    adj_[e.v].push_back({e.u, e.w, id});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(),
              [](const AdjEntry& a, const AdjEntry& b) { return a.to < b.to; });
  }
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair<Vertex, Vertex>{u, v},
      [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
        return e.u != key.first ? e.u < key.first : e.v < key.second;
      });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Weight w_max(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("no edges");
  Weight best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, e.w);
  return best;
}

WeightedGraph parse_edge_list(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::size_t line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'n m'");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    long long u, v, w;
    if (!(fields >> u >> v >> w))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v w'");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                     static_cast<Weight>(w)});
  }
  if (n < 0) throw ParseError("missing header line 'n m'");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return WeightedGraph(static_cast<Vertex>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_edge_list(in);
}

void serialize_edge_list(const WeightedGraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

std::string graph_to_string(const WeightedGraph& g) {
  std::ostringstream out;
  serialize_edge_list(g, out);
  return out.str();
}

void write_graph_file(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  serialize_edge_list(g, out);
}

}  // namespace spanner
