#include "spanner/generators.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "spanner/paths.hpp"
#include "spanner/rng.hpp"

namespace spanner {

namespace {

Weight draw_weight(Rng& rng, const GeneratorSpec& spec) {
  if (spec.w_lo == spec.w_hi) return spec.w_lo;
  return rng.uniform_int(spec.w_lo, spec.w_hi);
}

WeightedGraph gen_gnp(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) {
      if (rng.chance(spec.edge_probability))
        edges.push_back({u, v, draw_weight(rng, spec)});
    }
  }
  return WeightedGraph(spec.n, std::move(edges));
}

WeightedGraph gen_cycle(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spec.n; ++i)
    edges.push_back({i, i + 1, draw_weight(rng, spec)});
  if (spec.n >= 3) edges.push_back({0, spec.n - 1, draw_weight(rng, spec)});
  return WeightedGraph(spec.n, std::move(edges));
}

WeightedGraph gen_path(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spec.n; ++i)
    edges.push_back({i, i + 1, draw_weight(rng, spec)});
  return WeightedGraph(spec.n, std::move(edges));
}

WeightedGraph gen_grid(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const Vertex r = spec.rows, c = spec.cols;
  if (r < 1 || c < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  auto at = [c](Vertex i, Vertex j) { return i * c + j; };
  for (Vertex i = 0; i < r; ++i) {
    for (Vertex j = 0; j < c; ++j) {
      if (j + 1 < c) edges.push_back({at(i, j), at(i, j + 1), draw_weight(rng, spec)});
      if (i + 1 < r) edges.push_back({at(i, j), at(i + 1, j), draw_weight(rng, spec)});
    }
  }
  return WeightedGraph(r * c, std::move(edges));
}

// Random attachment tree: vertex i >= 1 hangs off a uniform earlier vertex.
WeightedGraph gen_tree(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < spec.n; ++i) {
    const Vertex p = static_cast<Vertex>(rng.bounded(static_cast<std::uint64_t>(i)));
    edges.push_back({p, i, draw_weight(rng, spec)});
  }
  return WeightedGraph(spec.n, std::move(edges));
}

std::map<std::string, WeightedGraph> make_fixtures() {
  std::map<std::string, WeightedGraph> f;
  f.emplace("C4", WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}));
  f.emplace("C5", WeightedGraph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}}));
  f.emplace("PATH4", WeightedGraph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}));
  f.emplace("DIAMOND", WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {2, 3, 1}}));
  f.emplace("TRI112", WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}}));
  f.emplace("TRI113", WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}}));
  // Two 0..3 routes of equal length 6 with bottlenecks max(1,5)=5 and
  // max(3,3)=3; the bottleneck-aware distance check must report 3.
  f.emplace("BOTTLENECK",
            WeightedGraph(4, {{0, 1, 1}, {1, 3, 5}, {0, 2, 3}, {2, 3, 3}}));
  // Path 0-1-2-3-4 plus the bypass 0-5-2. With H = {(0,5),(5,2),(3,4)} the
  // pair (0,4) is repaired by adding only (2,3): the prefix [0..2] rides the
  // bypass and the tail edge is already present.
  f.emplace("PARTIAL",
            WeightedGraph(6, {{0, 1, 1},
                              {1, 2, 1},
                              {2, 3, 1},
                              {3, 4, 1},
                              {0, 5, 1},
                              {2, 5, 1}}));
  return f;
}

}  // namespace

const std::map<std::string, WeightedGraph>& builtin_fixtures() {
  static const std::map<std::string, WeightedGraph> fixtures = make_fixtures();
  return fixtures;
}

WeightedGraph fixture(const std::string& name) {
  const auto& all = builtin_fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown fixture '" + name + "'");
  return it->second;
}

WeightedGraph generate(const GeneratorSpec& spec) {
  if (spec.family != GraphFamily::Fixture) {
    if (spec.n < 0) throw std::invalid_argument("negative n");
    if (spec.w_lo < 1 || spec.w_hi < spec.w_lo)
      throw std::invalid_argument("weight range must satisfy 1 <= w_lo <= w_hi");
  }
  WeightedGraph g;
  switch (spec.family) {
    case GraphFamily::RandomGnp:
      if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0)
        throw std::invalid_argument("edge probability must be in [0,1]");
      g = gen_gnp(spec);
      break;
    case GraphFamily::Cycle:
      g = gen_cycle(spec);
      break;
    case GraphFamily::Path:
      g = gen_path(spec);
      break;
    case GraphFamily::Grid:
      g = gen_grid(spec);
      break;
    case GraphFamily::Tree:
      g = gen_tree(spec);
      break;
    case GraphFamily::Fixture:
      g = fixture(spec.fixture_name);
      break;
  }
  if (spec.preprocess_output) g = preprocess(g);
  return g;
}

}  // namespace spanner
