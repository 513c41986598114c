#include "spanner/segmentation.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace spanner {

namespace {

// dist_H between two path positions; the memoized per-source rows on the
// state serve repeated queries for the duration of one computation.
Distance dist_h(const PathInG& path, const SpannerState& h, std::size_t a,
                std::size_t b) {
  return h.distances_from(path.vertices[a])[path.vertices[b]];
}

// Merged segment [a, b] keeps the alpha condition.
bool merge_ok(const PathInG& path, const SpannerState& h, const Rational& alpha,
              std::size_t a, std::size_t b) {
  return within_ratio(dist_h(path, h, a, b), alpha, path.dist_between(a, b));
}

}  // namespace

bool Segmentation::structurally_valid(std::size_t path_edges) const {
  if (cuts.size() < 2) return false;
  if (cuts.front() != 0 || cuts.back() != path_edges) return false;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i - 1] >= cuts[i]) return false;
  return true;
}

Segmentation trivial_segmentation(const PathInG& path) {
  Segmentation s;
  s.cuts.resize(path.edge_count() + 1);
  std::iota(s.cuts.begin(), s.cuts.end(), 0);
  return s;
}

bool is_alpha_segmentation(const PathInG& path, const Segmentation& seg,
                           const SpannerState& h, const Rational& alpha) {
  if (!seg.structurally_valid(path.edge_count()))
    throw std::invalid_argument("segmentation does not fit the path");
  for (std::size_t j = 0; j + 1 < seg.cuts.size(); ++j) {
    const std::size_t a = seg.cuts[j], b = seg.cuts[j + 1];
    if (b - a < 2) continue;
    if (!merge_ok(path, h, alpha, a, b)) return false;
  }
  return true;
}

bool is_minimal(const PathInG& path, const Segmentation& seg,
                const SpannerState& h, const Rational& alpha) {
  if (!is_alpha_segmentation(path, seg, h, alpha))
    throw std::invalid_argument("not a valid alpha-segmentation");
  for (std::size_t l = 0; l + 2 < seg.cuts.size(); ++l) {
    for (std::size_t r = l + 2; r < seg.cuts.size(); ++r) {
      if (merge_ok(path, h, alpha, seg.cuts[l], seg.cuts[r])) return false;
    }
  }
  return true;
}

Segmentation minimal_segmentation(const PathInG& path, const SpannerState& h,
                                  const Rational& alpha) {
#ifndef NDEBUG
  // The caller promises a shortest path; prefix sums stand in for dist_G.
  assert(path.total_weight() ==
         sssp(h.base(), path.vertices.front()).dist[path.vertices.back()]);
#endif
  Segmentation seg = trivial_segmentation(path);
  if (path.edge_count() < 2) return seg;
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t l = 0; l + 2 < seg.cuts.size() && !merged; ++l) {
      // Longest valid run starting at l; runs are not monotone in r, so every
      // candidate is tested. Merging adjacent pairs only would miss runs
      // whose union is valid while no adjacent pair is.
      for (std::size_t r = seg.cuts.size() - 1; r >= l + 2; --r) {
        if (merge_ok(path, h, alpha, seg.cuts[l], seg.cuts[r])) {
          seg.cuts.erase(seg.cuts.begin() + l + 1, seg.cuts.begin() + r);
          merged = true;
          break;
        }
      }
    }
  }
  return seg;
}

std::vector<PathEdge> distant_edges(const PathInG& path, const Segmentation& seg,
                                    const SpannerState& h, const Rational& alpha) {
  std::vector<PathEdge> out;
  for (std::size_t j = 0; j + 1 < seg.cuts.size(); ++j) {
    const std::size_t a = seg.cuts[j];
    if (seg.cuts[j + 1] != a + 1) continue;
    const Weight w = path.edge_weight(a);
    if (exceeds_ratio(dist_h(path, h, a, a + 1), alpha, w)) {
      out.push_back({path.vertices[a], path.vertices[a + 1], w, a});
    }
  }
  return out;
}

std::vector<Segmentation> enumerate_minimal_segmentations(const PathInG& path,
                                                          const SpannerState& h,
                                                          const Rational& alpha) {
  const std::size_t t = path.edge_count();
  if (t > 14) throw std::invalid_argument("oracle size limit");
  std::vector<Segmentation> out;
  if (t == 0) return out;
  const std::size_t interior = t - 1;
  for (std::size_t mask = 0; mask < (std::size_t(1) << interior); ++mask) {
    Segmentation seg;
    seg.cuts.push_back(0);
    for (std::size_t i = 0; i < interior; ++i)
      if (mask & (std::size_t(1) << i)) seg.cuts.push_back(i + 1);
    seg.cuts.push_back(t);
    if (!is_alpha_segmentation(path, seg, h, alpha)) continue;
    if (is_minimal(path, seg, h, alpha)) out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace spanner
