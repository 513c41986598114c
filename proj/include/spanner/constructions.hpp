#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spanner/clustering.hpp"
#include "spanner/completion.hpp"

namespace spanner {

struct ConstructionResult {
  SpannerState spanner;
  CompletionTrace trace;  // empty for constructions that do not complete
  std::optional<CenterHierarchy> hierarchy;
  std::string algorithm;
  int k{0};
  Rational alpha{1, 1};
  Rational beta{0, 1};
  std::optional<Rational> gamma;
  std::optional<Rational> epsilon;
  std::uint64_t seed{0};
};

// Clustering-initialized completion yielding a (k, k-1)-spanner: every pair
// ends within k * dist_G + (k-1) * w_max(G). Runs for all k >= 2; expects a
// preprocessed graph.
ConstructionResult kk1_spanner(const WeightedGraph& g, int k, std::uint64_t seed);

// Additive +beta spanner for unit-weight graphs: seed each vertex with its
// ceil(n^gamma) lowest-id neighbor edges, then repair violating pairs by
// adding whole shortest paths. beta in {2, 6}; gamma in (0, 1].
ConstructionResult knudsen_additive(const WeightedGraph& g, int beta,
                                    const Rational& gamma);

// Classical greedy (2k-1)-spanner: edges in nondecreasing weight (ties by
// canonical order), kept iff the current spanner distance between the
// endpoints exceeds (2k-1) times the weight.
ConstructionResult greedy_multiplicative(const WeightedGraph& g, int k);

// Locality-aware variant: repairs a pair only when it violates
// k * dist_G + eps * w_max(G) and its minimal segmentation has >= 2 distant
// edges; pairs with fewer already satisfy the per-path bottleneck guarantee.
ConstructionResult local_variant(const WeightedGraph& g, int k,
                                 const Rational& eps, std::uint64_t seed);

}  // namespace spanner
