#include "spanner/spanner_state.hpp"

#include <algorithm>

#include "spanner/detail.hpp"

namespace spanner {

SpannerState::SpannerState(const WeightedGraph& base)
    : base_(&base),
      present_(base.edge_count(), 0),
      adj_(base.vertex_count()) {}

SpannerState SpannerState::full(const WeightedGraph& base) {
  SpannerState s(base);
  for (EdgeId id = 0; id < base.edge_count(); ++id) s.insert(id);
  return s;
}

SpannerState SpannerState::from_edges(const WeightedGraph& base,
                                      const std::vector<EdgeId>& ids) {
  SpannerState s(base);
  for (EdgeId id : ids) s.insert(id);
  return s;
}

SpannerState SpannerState::from_subgraph(const WeightedGraph& base,
                                         const WeightedGraph& h) {
  if (h.vertex_count() != base.vertex_count())
    throw SubgraphError("subgraph has a different vertex count");
  SpannerState s(base);
  for (const Edge& e : h.edges()) {
    auto id = base.find_edge(e.u, e.v);
    if (!id || base.edge(*id).w != e.w)
      throw SubgraphError("edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + "," + std::to_string(e.w) +
                          ") is not an edge of the base graph");
    s.insert(*id);
  }
  return s;
}

bool SpannerState::contains(Vertex u, Vertex v) const {
  auto id = base_->find_edge(u, v);
  return id && contains(*id);
}

bool SpannerState::insert(EdgeId id) {
  if (present_[id]) return false;
  present_[id] = 1;
  ++count_;
  const Edge& e = base_->edge(id);
  adj_[e.u].push_back({e.v, e.w, id});
  adj_[e.v].push_back({e.u, e.w, id});
  cache_.clear();
  return true;
}

std::vector<EdgeId> SpannerState::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(count_);
  for (EdgeId id = 0; id < present_.size(); ++id)
    if (present_[id]) ids.push_back(id);
  return ids;
}

WeightedGraph SpannerState::to_graph() const {
  std::vector<Edge> es;
  es.reserve(count_);
  for (EdgeId id = 0; id < present_.size(); ++id)
    if (present_[id]) es.push_back(base_->edge(id));
  return WeightedGraph(base_->vertex_count(), std::move(es));
}

const std::vector<Distance>& SpannerState::distances_from(Vertex s) const {
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  auto [pos, _] =
      cache_.emplace(s, detail::dijkstra(base_->vertex_count(), adj_, s));
  return pos->second;
}

}  // namespace spanner
