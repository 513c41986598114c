#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spanner/spanner_state.hpp"

namespace spanner {

// Sampled center sets S_0 = V >= S_1 >= ... >= S_k with per-vertex,
// per-level center assignments and explicit radius certificates: for every
// assigned (v, i) a path in H0 from v to its center. Certificates make the
// invariant below checkable without trusting construction internals.
struct CenterHierarchy {
  int k{0};
  std::vector<std::vector<Vertex>> levels;            // [0..k], each sorted
  std::vector<std::vector<Vertex>> center;            // [level][v], -1 if none
  std::vector<std::vector<std::vector<Vertex>>> cert; // [level][v] path v..center

  bool assigned(int level, Vertex v) const { return center[level][v] >= 0; }
  Vertex center_of(int level, Vertex v) const { return center[level][v]; }
  const std::vector<Vertex>& cert_path(int level, Vertex v) const {
    return cert[level][v];
  }
  // Weight of the certificate path (0 for self-centered vertices).
  Distance cert_radius(const WeightedGraph& g, int level, Vertex v) const;
};

struct BaswanaSenResult {
  SpannerState h0;
  CenterHierarchy hierarchy;
};

// Randomized clustering producing a (2k-1)-spanner H0 and the hierarchy.
// Sampling probability n^(-1/k) per level; vertices join the cheapest
// sampled neighboring cluster through an edge at least as heavy as every hop
// of the attachment's own certificate, keeping certificate paths hop-bounded
// per level. Vertices without such a join add one cheapest admissible edge
// towards every neighboring cluster and leave the clustering. Deterministic
// given (g, k, seed). Expects a preprocessed graph (every edge a shortest
// path between its endpoints).
BaswanaSenResult baswana_sen(const WeightedGraph& g, int k, std::uint64_t seed);

enum class ClusterVerdict : std::uint8_t {
  DirectStretch = 0,  // dist_H0(u,v) <= (2i-1) w(e)
  CenterRadius = 1,   // both endpoints have level-i centers within i * w(e)
  Violation = 2,
};

struct ClusterInvariantReport {
  struct Violation {
    EdgeId edge{};
    int level{};
    std::string reason;
  };
  // verdict[i-1][edge] for level i in 1..k.
  std::vector<std::vector<std::uint8_t>> verdict;
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
};

// For every level i in 1..k and every edge e = (u,v) of G, verifies that
// either dist_H0(u,v) <= (2i-1) w(e), or both endpoints have level-i centers
// with dist_H0(endpoint, center) <= i * w(e). Distances come from exact
// shortest paths in H0, not from the certificates. A missing assignment
// needed by the second alternative is reported as a violation.
ClusterInvariantReport check_cluster_invariant(const WeightedGraph& g,
                                               const SpannerState& h0,
                                               const CenterHierarchy& hierarchy,
                                               int k);

// Structural validation: level nesting, center membership, certificate paths
// valid in H0 with the right endpoints. Returns human-readable problems;
// empty means valid.
std::vector<std::string> validate_hierarchy(const WeightedGraph& g,
                                            const SpannerState& h0,
                                            const CenterHierarchy& hierarchy);

std::vector<std::size_t> center_set_sizes(const CenterHierarchy& hierarchy);

// Hierarchy text format:
//   hierarchy n=<n> k=<k>
//   level <i> <c...>
//   assign <level> <v> <center> <path vertices v..center>
void serialize_hierarchy(const CenterHierarchy& hierarchy, Vertex n,
                         std::ostream& out);
std::string hierarchy_to_string(const CenterHierarchy& hierarchy, Vertex n);
CenterHierarchy parse_hierarchy(std::istream& in, Vertex n);
CenterHierarchy read_hierarchy_file(const std::string& path, Vertex n);
void write_hierarchy_file(const CenterHierarchy& hierarchy, Vertex n,
                          const std::string& path);

}  // namespace spanner
