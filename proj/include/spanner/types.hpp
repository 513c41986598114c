#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace spanner {

using Vertex = std::int32_t;
using Weight = std::int64_t;
using Distance = std::int64_t;
using EdgeId = std::size_t;

// Sentinel for unreachable pairs. Never add to it without checking first.
inline constexpr Distance kInfDistance = std::numeric_limits<Distance>::max();

inline bool is_inf(Distance d) { return d == kInfDistance; }

// Input file or stream cannot be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A claimed subgraph contains an edge absent from its base graph.
struct SubgraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A recorded trace does not replay against the artifacts it claims to match.
struct TraceMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checked-mode execution detected a broken internal invariant.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spanner
