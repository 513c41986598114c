#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "spanner/graph.hpp"

namespace spanner {

enum class GraphFamily { RandomGnp, Cycle, Path, Grid, Tree, Fixture };

// Deterministic recipe for a test/benchmark graph. Same spec, same bytes.
struct GeneratorSpec {
  GraphFamily family{GraphFamily::RandomGnp};
  Vertex n{0};
  double edge_probability{0.0};  // gnp
  Vertex rows{0}, cols{0};       // grid
  Weight w_lo{1}, w_hi{1};
  std::uint64_t seed{0};
  bool preprocess_output{false};
  std::string fixture_name;
};

WeightedGraph generate(const GeneratorSpec& spec);

// Small hand-pinned graphs used across the test suites:
//   C4, C5, PATH4       unit cycles / path
//   DIAMOND             4-cycle 0-1-2-3 written as two 0..2 routes
//   TRI112, TRI113      triangles; TRI113's heavy edge is not a shortest path
//   BOTTLENECK          two equal-length 0..3 routes, bottlenecks 5 vs 3
//   PARTIAL             bypassed prefix + pendant tail; repairing pair (0,4)
//                       from H = {(0,5),(5,2),(3,4)} adds only edge (2,3)
const std::map<std::string, WeightedGraph>& builtin_fixtures();
WeightedGraph fixture(const std::string& name);

}  // namespace spanner
