#pragma once

#include <vector>

#include "spanner/paths.hpp"
#include "spanner/rational.hpp"
#include "spanner/spanner_state.hpp"

namespace spanner {

// Cut indices over a shortest path with t edges: 0 = cuts[0] < ... <
// cuts.back() = t. A cut pair (cuts[j], cuts[j+1]) is one segment; segments
// of one edge are unconstrained, longer segments must have endpoint stretch
// at most alpha in H.
struct Segmentation {
  std::vector<std::size_t> cuts;

  std::size_t segment_count() const { return cuts.empty() ? 0 : cuts.size() - 1; }
  bool structurally_valid(std::size_t path_edges) const;

  bool operator==(const Segmentation& o) const { return cuts == o.cuts; }
  bool operator<(const Segmentation& o) const { return cuts < o.cuts; }
};

Segmentation trivial_segmentation(const PathInG& path);

// Unit segment whose endpoints are farther than alpha times its weight in H.
struct PathEdge {
  Vertex u{};
  Vertex v{};
  Weight w{};
  std::size_t index{};  // position along the path, 0-based

  bool operator==(const PathEdge& o) const {
    return u == o.u && v == o.v && w == o.w && index == o.index;
  }
};

// Every segment of >= 2 edges satisfies dist_H(endpoints) <= alpha *
// dist_G(endpoints); unit segments are unconstrained.
bool is_alpha_segmentation(const PathInG& path, const Segmentation& seg,
                           const SpannerState& h, const Rational& alpha);

// No run of >= 2 consecutive segments can be merged into a valid segment:
// for every cut pair l < r with r - l >= 2 the merged endpoints have stretch
// strictly above alpha. Throws std::invalid_argument when seg is not a valid
// alpha-segmentation.
bool is_minimal(const PathInG& path, const Segmentation& seg,
                const SpannerState& h, const Rational& alpha);

// Greedy merge scan: find the leftmost cut position admitting a valid merge,
// take the longest valid run starting there, merge, and rescan until a full
// pass finds nothing. The fixpoint is a minimal alpha-segmentation and the
// scan order makes it deterministic.
Segmentation minimal_segmentation(const PathInG& path, const SpannerState& h,
                                  const Rational& alpha);

// The unit segments of seg whose endpoints have stretch > alpha in H, in
// path order.
std::vector<PathEdge> distant_edges(const PathInG& path, const Segmentation& seg,
                                    const SpannerState& h, const Rational& alpha);

// Brute-force oracle: all cut subsets of a path with <= 14 edges, filtered by
// validity and minimality. Throws std::invalid_argument("oracle size limit")
// beyond that.
std::vector<Segmentation> enumerate_minimal_segmentations(const PathInG& path,
                                                          const SpannerState& h,
                                                          const Rational& alpha);

}  // namespace spanner
