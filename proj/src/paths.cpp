#include "spanner/paths.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <thread>
#include <utility>

#include "spanner/detail.hpp"

namespace spanner {

namespace detail {

std::vector<Distance> dijkstra(Vertex n,
                               const std::vector<std::vector<AdjEntry>>& adj,
                               Vertex source) {
  std::vector<Distance> dist(n, kInfDistance);
  dist[source] = 0;
  using Item = std::pair<Distance, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const AdjEntry& e : adj[u]) {
      const Distance nd = d + e.w;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        heap.emplace(nd, e.to);
      }
    }
  }
  return dist;
}

}  // namespace detail

SsspResult sssp(const WeightedGraph& g, Vertex source) {
  const Vertex n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("source out of range");
  SsspResult r;
  r.dist = detail::dijkstra(n, g.adjacency(), source);
  // Predecessors are derived from final distances, not heap order: the
  // smallest-id neighbor on a shortest path wins, which makes the canonical
  // path unique for every reachable vertex.
  r.parent.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (v == source || is_inf(r.dist[v])) continue;
    for (const AdjEntry& e : g.neighbors(v)) {
      if (!is_inf(r.dist[e.to]) && r.dist[e.to] + e.w == r.dist[v]) {
        r.parent[v] = e.to;  // neighbors are sorted by id; first hit is smallest
        break;
      }
    }
  }
  return r;
}

PathInG path_from_vertices(const WeightedGraph& g, const std::vector<Vertex>& vs) {
  if (vs.empty()) throw std::invalid_argument("empty path");
  PathInG p;
  p.vertices = vs;
  p.prefix.assign(vs.size(), 0);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    auto id = g.find_edge(vs[i], vs[i + 1]);
    if (!id) throw std::invalid_argument("path vertices not adjacent");
    p.prefix[i + 1] = p.prefix[i] + g.edge(*id).w;
  }
  return p;
}

PathInG shortest_path_from_tree(const WeightedGraph& g, const SsspResult& tree,
                                Vertex x, Vertex y) {
  if (is_inf(tree.dist[y])) throw std::invalid_argument("unreachable");
  std::vector<Vertex> vs;
  for (Vertex v = y; v != x; v = tree.parent[v]) vs.push_back(v);
  vs.push_back(x);
  std::reverse(vs.begin(), vs.end());
  return path_from_vertices(g, vs);
}

PathInG shortest_path(const WeightedGraph& g, Vertex x, Vertex y) {
  return shortest_path_from_tree(g, sssp(g, x), x, y);
}

DistanceTable apsp(const WeightedGraph& g) {
  const Vertex n = g.vertex_count();
  DistanceTable table(n);
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned jobs = std::min<unsigned>(hw == 0 ? 1 : hw, 8);
  auto run_range = [&](Vertex lo, Vertex hi) {
    for (Vertex s = lo; s < hi; ++s)
      table.set_row(s, detail::dijkstra(n, g.adjacency(), s));
  };
  if (jobs <= 1 || n < 64) {
    run_range(0, n);
    return table;
  }
  std::vector<std::thread> workers;
  const Vertex chunk = (n + static_cast<Vertex>(jobs) - 1) / static_cast<Vertex>(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    const Vertex lo = static_cast<Vertex>(j) * chunk;
    const Vertex hi = std::min<Vertex>(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back(run_range, lo, hi);
  }
  for (auto& t : workers) t.join();
  return table;
}

WeightedGraph preprocess(const WeightedGraph& g) {
  const DistanceTable table = apsp(g);
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (table.at(e.u, e.v) >= e.w) kept.push_back(e);
  }
  return WeightedGraph(g.vertex_count(), std::move(kept));
}

}  // namespace spanner
