#pragma once

#include <vector>

#include "spanner/graph.hpp"
#include "spanner/types.hpp"

namespace spanner::detail {

// Plain binary-heap Dijkstra over an adjacency-list view; shared by graph
// and subgraph distance queries.
std::vector<Distance> dijkstra(Vertex n,
                               const std::vector<std::vector<AdjEntry>>& adj,
                               Vertex source);

}  // namespace spanner::detail
