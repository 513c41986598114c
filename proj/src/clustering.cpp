#include "spanner/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spanner/paths.hpp"
#include "spanner/rng.hpp"

namespace spanner {

Distance CenterHierarchy::cert_radius(const WeightedGraph& g, int level,
                                      Vertex v) const {
  const auto& path = cert[level][v];
  Distance total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto id = g.find_edge(path[i], path[i + 1]);
    if (!id) throw std::invalid_argument("certificate uses a non-edge");
    total += g.edge(*id).w;
  }
  return total;
}

BaswanaSenResult baswana_sen(const WeightedGraph& g, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const Vertex n = g.vertex_count();
  const double p = n > 1 ? std::pow(static_cast<double>(n), -1.0 / k) : 1.0;

  CenterHierarchy hy;
  hy.k = k;
  hy.levels.assign(k + 1, {});
  hy.center.assign(k + 1, std::vector<Vertex>(n, -1));
  hy.cert.assign(k + 1, std::vector<std::vector<Vertex>>(n));

  hy.levels[0].resize(n);
  for (Vertex v = 0; v < n; ++v) {
    hy.levels[0][v] = v;
    hy.center[0][v] = v;
    hy.cert[0][v] = {v};
  }

  SpannerState h0(g);
  Rng root(seed);

  // Heaviest hop on each vertex's current certificate path. A join through
  // edge f is admissible only when w(f) >= that bound at the attachment, so
  // certificate paths at level j have at most j hops, none heavier than the
  // joining edge. This is what makes the level-i radius claim checkable
  // edge by edge.
  std::vector<Weight> max_hop(n, 0);

  for (int j = 1; j <= k; ++j) {
    std::vector<char> sampled(n, 0);
    if (j < k) {
      Rng level_rng = root.fork(static_cast<std::uint64_t>(j));
      for (Vertex s : hy.levels[j - 1]) {
        if (level_rng.chance(p)) {
          sampled[s] = 1;
          hy.levels[j].push_back(s);
        }
      }
    }
    // Last round samples nothing: every remaining vertex connects to all its
    // neighboring clusters, which settles every still-unsettled edge.

    std::vector<Weight> next_hop = max_hop;
    const auto& prev_center = hy.center[j - 1];

    for (Vertex v = 0; v < n; ++v) {
      if (prev_center[v] < 0) continue;
      if (sampled[prev_center[v]]) {
        hy.center[j][v] = prev_center[v];
        hy.cert[j][v] = hy.cert[j - 1][v];
        continue;
      }
      // Cheapest admissible edge into each neighboring cluster, keyed by the
      // cluster's center for deterministic iteration.
      struct Cand {
        Weight w;
        Vertex via;
        EdgeId id;
      };
      std::map<Vertex, Cand> best;
      for (const AdjEntry& e : g.neighbors(v)) {
        const Vertex tau = prev_center[e.to];
        if (tau < 0) continue;
        if (e.w < max_hop[e.to]) continue;  // inadmissible attachment
        auto it = best.find(tau);
        if (it == best.end() || e.w < it->second.w ||
            (e.w == it->second.w && e.to < it->second.via)) {
          best[tau] = {e.w, e.to, e.id};
        }
      }
      const Cand* chosen = nullptr;
      Vertex chosen_center = -1;
      for (const auto& [tau, cand] : best) {
        if (!sampled[tau]) continue;
        if (!chosen || cand.w < chosen->w ||
            (cand.w == chosen->w && cand.via < chosen->via)) {
          chosen = &cand;
          chosen_center = tau;
        }
      }
      if (chosen) {
        h0.insert(chosen->id);
        hy.center[j][v] = chosen_center;
        auto& path = hy.cert[j][v];
        path.clear();
        path.push_back(v);
        const auto& tail = hy.cert[j - 1][chosen->via];
        path.insert(path.end(), tail.begin(), tail.end());
        next_hop[v] = chosen->w;
        // One cheapest edge towards every strictly cheaper cluster, sampled
        // or not; this is what settles edges whose own cluster went away.
        for (const auto& [tau, cand] : best) {
          if (tau == chosen_center) continue;
          if (cand.w < chosen->w) h0.insert(cand.id);
        }
      } else {
        // No admissible sampled cluster: leave the clustering, keeping one
        // cheapest edge per neighboring cluster.
        for (const auto& [tau, cand] : best) h0.insert(cand.id);
      }
    }
    max_hop = std::move(next_hop);
  }
  return {std::move(h0), std::move(hy)};
}

ClusterInvariantReport check_cluster_invariant(const WeightedGraph& g,
                                               const SpannerState& h0,
                                               const CenterHierarchy& hierarchy,
                                               int k) {
  ClusterInvariantReport report;
  report.verdict.assign(k, std::vector<std::uint8_t>(g.edge_count(), 0));
  const DistanceTable dist0 = apsp(h0.to_graph());

  for (int i = 1; i <= k; ++i) {
    auto& row = report.verdict[i - 1];
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      const Distance duv = dist0.at(e.u, e.v);
      if (!is_inf(duv) && duv <= Distance(2 * i - 1) * e.w) {
        row[id] = static_cast<std::uint8_t>(ClusterVerdict::DirectStretch);
        continue;
      }
      const bool has_u = hierarchy.assigned(i, e.u);
      const bool has_v = hierarchy.assigned(i, e.v);
      if (has_u && has_v) {
        const Distance ru = dist0.at(e.u, hierarchy.center_of(i, e.u));
        const Distance rv = dist0.at(e.v, hierarchy.center_of(i, e.v));
        if (!is_inf(ru) && !is_inf(rv) && ru <= Distance(i) * e.w &&
            rv <= Distance(i) * e.w) {
          row[id] = static_cast<std::uint8_t>(ClusterVerdict::CenterRadius);
          continue;
        }
      }
      row[id] = static_cast<std::uint8_t>(ClusterVerdict::Violation);
      std::ostringstream why;
      why << "edge (" << e.u << "," << e.v << ") level " << i << ": ";
      if (!has_u || !has_v)
        why << "missing level-" << i << " assignment for "
            << (!has_u ? e.u : e.v);
      else
        why << "neither direct stretch nor center radius holds";
      report.violations.push_back({id, i, why.str()});
    }
  }
  return report;
}

std::vector<std::string> validate_hierarchy(const WeightedGraph& g,
                                            const SpannerState& h0,
                                            const CenterHierarchy& hierarchy) {
  std::vector<std::string> problems;
  const Vertex n = g.vertex_count();
  const int k = hierarchy.k;
  auto complain = [&problems](const std::string& msg) { problems.push_back(msg); };

  if (static_cast<int>(hierarchy.levels.size()) != k + 1) {
    complain("hierarchy must have k+1 levels");
    return problems;
  }
  if (static_cast<Vertex>(hierarchy.levels[0].size()) != n)
    complain("level 0 must contain every vertex");
  for (int i = 1; i <= k; ++i) {
    if (!std::includes(hierarchy.levels[i - 1].begin(),
                       hierarchy.levels[i - 1].end(),
                       hierarchy.levels[i].begin(), hierarchy.levels[i].end()))
      complain("level " + std::to_string(i) + " is not nested in level " +
               std::to_string(i - 1));
  }
  for (int i = 0; i <= k; ++i) {
    const auto& centers = hierarchy.levels[i];
    for (Vertex v = 0; v < n; ++v) {
      if (!hierarchy.assigned(i, v)) continue;
      const Vertex s = hierarchy.center_of(i, v);
      if (!std::binary_search(centers.begin(), centers.end(), s))
        complain("vertex " + std::to_string(v) + " level " + std::to_string(i) +
                 ": center " + std::to_string(s) + " not in the level set");
      const auto& path = hierarchy.cert_path(i, v);
      if (path.empty() || path.front() != v || path.back() != s) {
        complain("vertex " + std::to_string(v) + " level " + std::to_string(i) +
                 ": certificate endpoints are wrong");
        continue;
      }
      for (std::size_t p = 0; p + 1 < path.size(); ++p) {
        if (!h0.contains(path[p], path[p + 1])) {
          complain("vertex " + std::to_string(v) + " level " +
                   std::to_string(i) + ": certificate edge (" +
                   std::to_string(path[p]) + "," + std::to_string(path[p + 1]) +
                   ") is not in H0");
          break;
        }
      }
    }
  }
  return problems;
}

std::vector<std::size_t> center_set_sizes(const CenterHierarchy& hierarchy) {
  std::vector<std::size_t> sizes;
  sizes.reserve(hierarchy.levels.size());
  for (const auto& level : hierarchy.levels) sizes.push_back(level.size());
  return sizes;
}

void serialize_hierarchy(const CenterHierarchy& hierarchy, Vertex n,
                         std::ostream& out) {
  out << "hierarchy n=" << n << " k=" << hierarchy.k << '\n';
  for (int i = 0; i <= hierarchy.k; ++i) {
    out << "level " << i;
    for (Vertex s : hierarchy.levels[i]) out << ' ' << s;
    out << '\n';
  }
  for (int i = 0; i <= hierarchy.k; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (!hierarchy.assigned(i, v)) continue;
      out << "assign " << i << ' ' << v << ' ' << hierarchy.center_of(i, v);
      for (Vertex u : hierarchy.cert_path(i, v)) out << ' ' << u;
      out << '\n';
    }
  }
}

std::string hierarchy_to_string(const CenterHierarchy& hierarchy, Vertex n) {
  std::ostringstream out;
  serialize_hierarchy(hierarchy, n, out);
  return out.str();
}

CenterHierarchy parse_hierarchy(std::istream& in, Vertex n) {
  CenterHierarchy hy;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("hierarchy line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "hierarchy") {
      std::string kv;
      long long n_claim = -1, k_claim = -1;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail("bad header field");
        const std::string key = kv.substr(0, eq);
        const long long val = std::stoll(kv.substr(eq + 1));
        if (key == "n") n_claim = val;
        else if (key == "k") k_claim = val;
        else fail("unknown header key '" + key + "'");
      }
      if (n_claim != n) fail("hierarchy is for a different graph");
      if (k_claim < 1) fail("bad k");
      hy.k = static_cast<int>(k_claim);
      hy.levels.assign(hy.k + 1, {});
      hy.center.assign(hy.k + 1, std::vector<Vertex>(n, -1));
      hy.cert.assign(hy.k + 1, std::vector<std::vector<Vertex>>(n));
      have_header = true;
    } else if (head == "level") {
      if (!have_header) fail("level before header");
      int i;
      if (!(fields >> i) || i < 0 || i > hy.k) fail("bad level index");
      Vertex s;
      while (fields >> s) {
        if (s < 0 || s >= n) fail("center out of range");
        hy.levels[i].push_back(s);
      }
      if (!std::is_sorted(hy.levels[i].begin(), hy.levels[i].end()))
        fail("level set must be sorted");
    } else if (head == "assign") {
      if (!have_header) fail("assign before header");
      int i;
      Vertex v, s;
      if (!(fields >> i >> v >> s) || i < 0 || i > hy.k || v < 0 || v >= n)
        fail("bad assign line");
      hy.center[i][v] = s;
      Vertex u;
      while (fields >> u) {
        if (u < 0 || u >= n) fail("path vertex out of range");
        hy.cert[i][v].push_back(u);
      }
      if (hy.cert[i][v].empty() || hy.cert[i][v].front() != v ||
          hy.cert[i][v].back() != s)
        fail("certificate endpoints are wrong");
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!have_header) throw ParseError("hierarchy: missing header");
  return hy;
}

CenterHierarchy read_hierarchy_file(const std::string& path, Vertex n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_hierarchy(in, n);
}

void write_hierarchy_file(const CenterHierarchy& hierarchy, Vertex n,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  serialize_hierarchy(hierarchy, n, out);
}

}  // namespace spanner
