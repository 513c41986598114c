#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanner/paths.hpp"
#include "spanner/rational.hpp"
#include "spanner/segmentation.hpp"
#include "spanner/spanner_state.hpp"

namespace spanner {

// How a violating pair is repaired along its shortest path.
//   MinimalSegmentation  add the distant edges of a minimal segmentation
//   FullPath             add every absent path edge
//   AllDistant           trivial segmentation, add every distant edge
// FullPath and AllDistant exist for experimental comparison of added-edge
// counts; both still leave the repaired pair with stretch <= alpha.
enum class RepairStrategy { MinimalSegmentation, FullPath, AllDistant };

std::string strategy_name(RepairStrategy s);
RepairStrategy strategy_from_name(const std::string& name);

// One completion iteration: chosen pair, its canonical shortest path, the
// segmentation used, the edges inserted, and the pair's H-distance before
// and after.
struct IterationRecord {
  std::size_t index{};
  Vertex x{}, y{};
  PathInG path;
  Segmentation segmentation;
  std::vector<PathEdge> added;
  Distance pre_distance{kInfDistance};
  Distance post_distance{kInfDistance};
};

struct CompletionTrace {
  Rational alpha{1, 1};
  Rational beta{0, 1};
  RepairStrategy strategy{RepairStrategy::MinimalSegmentation};
  std::size_t initial_edges{};
  std::size_t final_edges{};
  std::vector<IterationRecord> iterations;

  std::size_t added_total() const;
};

struct CompletionOptions {
  Rational alpha{1, 1};
  Rational beta{0, 1};
  RepairStrategy strategy{RepairStrategy::MinimalSegmentation};
  // Repair a violating pair only when its minimal segmentation has at least
  // this many distant edges (the locality-aware variant passes 2); pairs
  // below the threshold are left alone.
  std::size_t min_distant_to_repair{0};
  // Re-verify the cut-pair stretch condition after every repair; a failure
  // raises InvariantError.
  bool checked{false};
};

struct CompletionResult {
  SpannerState spanner;
  CompletionTrace trace;
};

// Lexicographically smallest pair (x, y), x < y, with
// dist_H(x,y) > alpha * dist_G(x,y) + beta * w_max(G), if any.
std::optional<std::pair<Vertex, Vertex>> find_violating_pair(
    const WeightedGraph& g, const DistanceTable& dist_g, const SpannerState& h,
    const Rational& alpha, const Rational& beta);

// Repairs one pair in place. Requires dist_H(x,y) > alpha * dist_G(x,y);
// throws std::invalid_argument otherwise (a non-violating pair has a
// single-segment minimal segmentation with no distant edges, so there would
// be nothing to do).
IterationRecord completion_step(
    const WeightedGraph& g, SpannerState& h, Vertex x, Vertex y,
    const Rational& alpha,
    RepairStrategy strategy = RepairStrategy::MinimalSegmentation);

// Runs the completion loop until no repairable pair remains. Scans pairs in
// lexicographic order; distances only shrink as edges are inserted, so a
// fixed pair never re-violates and the loop ends within n(n-1)/2 repairs.
CompletionResult complete(const WeightedGraph& g, SpannerState h0,
                          const CompletionOptions& opts);
CompletionResult complete(const WeightedGraph& g, SpannerState h0,
                          const Rational& alpha, const Rational& beta);

// Trace file format (line oriented, '#' comments):
//   trace n=<n> alpha=<a> beta=<b> strategy=<s> initial=<m0> final=<m1> iterations=<I>
//   iter <idx> pair <x> <y> pre <d|inf> post <d>
//   path <v0> <v1> ...
//   cuts <c0> <c1> ...
//   add <u> <v> <w>        (one line per inserted edge)
void serialize_trace(const CompletionTrace& trace, Vertex n, std::ostream& out);
std::string trace_to_string(const CompletionTrace& trace, Vertex n);
CompletionTrace parse_trace(std::istream& in, const WeightedGraph& g);
CompletionTrace read_trace_file(const std::string& path, const WeightedGraph& g);
void write_trace_file(const CompletionTrace& trace, Vertex n,
                      const std::string& path);

}  // namespace spanner
