#include "spanner/completion.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "spanner/graph.hpp"

namespace spanner {

std::string strategy_name(RepairStrategy s) {
  switch (s) {
    case RepairStrategy::MinimalSegmentation: return "minseg";
    case RepairStrategy::FullPath: return "fullpath";
    case RepairStrategy::AllDistant: return "alldistant";
  }
  return "?";
}

RepairStrategy strategy_from_name(const std::string& name) {
  if (name == "minseg") return RepairStrategy::MinimalSegmentation;
  if (name == "fullpath") return RepairStrategy::FullPath;
  if (name == "alldistant") return RepairStrategy::AllDistant;
  throw std::invalid_argument("unknown repair strategy '" + name + "'");
}

std::size_t CompletionTrace::added_total() const {
  std::size_t total = 0;
  for (const auto& it : iterations) total += it.added.size();
  return total;
}

namespace {

struct StepPlan {
  Segmentation segmentation;
  std::vector<PathEdge> to_add;  // absent edges that will be inserted
};

StepPlan plan_step(const WeightedGraph& g, const SpannerState& h,
                   const PathInG& path, const Rational& alpha,
                   RepairStrategy strategy) {
  StepPlan plan;
  switch (strategy) {
    case RepairStrategy::MinimalSegmentation: {
      plan.segmentation = minimal_segmentation(path, h, alpha);
      // Distant edges are never present: a present edge e has
      // dist_H(u,v) <= w(e) <= alpha * w(e).
      plan.to_add = distant_edges(path, plan.segmentation, h, alpha);
      break;
    }
    case RepairStrategy::AllDistant: {
      plan.segmentation = trivial_segmentation(path);
      plan.to_add = distant_edges(path, plan.segmentation, h, alpha);
      break;
    }
    case RepairStrategy::FullPath: {
      plan.segmentation = trivial_segmentation(path);
      for (std::size_t i = 0; i < path.edge_count(); ++i) {
        const Vertex u = path.vertices[i], v = path.vertices[i + 1];
        if (!h.contains(u, v))
          plan.to_add.push_back({u, v, path.edge_weight(i), i});
      }
      break;
    }
  }
  return plan;
}

void apply_plan(const WeightedGraph& g, SpannerState& h, const StepPlan& plan) {
  for (const PathEdge& e : plan.to_add) {
    const auto id = g.find_edge(e.u, e.v);
    if (!id) throw InvariantError("path edge missing from base graph");
    h.insert(*id);
  }
}

// Every pair of cut vertices must have stretch <= alpha after the repair.
void check_cut_pairs(const PathInG& path, const Segmentation& seg,
                     const SpannerState& h, const Rational& alpha) {
  for (std::size_t l = 0; l + 1 < seg.cuts.size(); ++l) {
    for (std::size_t r = l + 1; r < seg.cuts.size(); ++r) {
      const std::size_t a = seg.cuts[l], b = seg.cuts[r];
      const Distance dh = h.distances_from(path.vertices[a])[path.vertices[b]];
      if (!within_ratio(dh, alpha, path.dist_between(a, b)))
        throw InvariantError("cut pair stretch check failed after repair");
    }
  }
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> find_violating_pair(
    const WeightedGraph& g, const DistanceTable& dist_g, const SpannerState& h,
    const Rational& alpha, const Rational& beta) {
  const Vertex n = g.vertex_count();
  const Weight wm = g.edge_count() ? w_max(g) : 0;
  for (Vertex x = 0; x < n; ++x) {
    const auto& dh = h.distances_from(x);
    for (Vertex y = x + 1; y < n; ++y) {
      if (violates_stretch(dh[y], alpha, dist_g.at(x, y), beta, wm))
        return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

IterationRecord completion_step(const WeightedGraph& g, SpannerState& h,
                                Vertex x, Vertex y, const Rational& alpha,
                                RepairStrategy strategy) {
  const auto tree = sssp(g, x);
  const Distance dg = tree.dist[y];
  const Distance pre = h.distance(x, y);
  if (!exceeds_ratio(pre, alpha, dg))
    throw std::invalid_argument("pair does not violate the stretch bound");
  IterationRecord rec;
  rec.x = x;
  rec.y = y;
  rec.path = shortest_path_from_tree(g, tree, x, y);
  rec.pre_distance = pre;
  StepPlan plan = plan_step(g, h, rec.path, alpha, strategy);
  rec.segmentation = std::move(plan.segmentation);
  rec.added = plan.to_add;
  apply_plan(g, h, plan);
  rec.post_distance = h.distance(x, y);
  return rec;
}

CompletionResult complete(const WeightedGraph& g, SpannerState h0,
                          const CompletionOptions& opts) {
  if (opts.alpha.num < opts.alpha.den)
    throw std::invalid_argument("alpha must be >= 1");
  if (opts.beta.is_negative()) throw std::invalid_argument("beta must be >= 0");

  const Vertex n = g.vertex_count();
  const Weight wm = g.edge_count() ? w_max(g) : 0;
  const std::size_t pair_budget = std::size_t(n) * (n > 0 ? n - 1 : 0) / 2;
  const DistanceTable dist_g = apsp(g);

  CompletionResult result{std::move(h0), {}};
  SpannerState& h = result.spanner;
  CompletionTrace& trace = result.trace;
  trace.alpha = opts.alpha;
  trace.beta = opts.beta;
  trace.strategy = opts.strategy;
  trace.initial_edges = h.edge_count();

  std::unordered_map<Vertex, SsspResult> g_trees;  // canonical paths in G
  auto tree_for = [&](Vertex x) -> const SsspResult& {
    auto it = g_trees.find(x);
    if (it == g_trees.end()) it = g_trees.emplace(x, sssp(g, x)).first;
    return it->second;
  };

  std::set<std::pair<Vertex, Vertex>> repaired;

  // Passes until a full scan repairs nothing. Monotone insertions mean a
  // standard run finishes in one pass plus one clean verification pass; the
  // threshold variant can leave pairs behind whose segmentations change
  // shape later, so those are re-examined.
  bool any_repair = true;
  while (any_repair) {
    any_repair = false;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const Distance dg = dist_g.at(x, y);
        if (!violates_stretch(h.distances_from(x)[y], opts.alpha, dg, opts.beta, wm))
          continue;
        IterationRecord rec;
        rec.x = x;
        rec.y = y;
        rec.pre_distance = h.distances_from(x)[y];
        rec.path = shortest_path_from_tree(g, tree_for(x), x, y);
        StepPlan plan = plan_step(g, h, rec.path, opts.alpha, opts.strategy);
        if (opts.min_distant_to_repair > 0 &&
            plan.to_add.size() < opts.min_distant_to_repair)
          continue;  // pair already meets the locality guarantee
        rec.segmentation = std::move(plan.segmentation);
        rec.added = plan.to_add;
        apply_plan(g, h, plan);
        rec.post_distance = h.distances_from(x)[y];
        rec.index = trace.iterations.size();

        if (!repaired.insert({x, y}).second)
          throw InvariantError("pair repaired twice");
        if (trace.iterations.size() >= pair_budget)
          throw InvariantError("completion exceeded the pair budget");
        if (opts.checked)
          check_cut_pairs(rec.path, rec.segmentation, h, opts.alpha);

        trace.iterations.push_back(std::move(rec));
        any_repair = true;
      }
    }
  }
  trace.final_edges = h.edge_count();
  return result;
}

CompletionResult complete(const WeightedGraph& g, SpannerState h0,
                          const Rational& alpha, const Rational& beta) {
  CompletionOptions opts;
  opts.alpha = alpha;
  opts.beta = beta;
  return complete(g, std::move(h0), opts);
}

namespace {

Distance parse_distance_token(const std::string& tok) {
  if (tok == "inf") return kInfDistance;
  return static_cast<Distance>(std::stoll(tok));
}

std::string distance_token(Distance d) {
  return is_inf(d) ? "inf" : std::to_string(d);
}

}  // namespace

void serialize_trace(const CompletionTrace& trace, Vertex n, std::ostream& out) {
  out << "trace n=" << n << " alpha=" << trace.alpha.str()
      << " beta=" << trace.beta.str()
      << " strategy=" << strategy_name(trace.strategy)
      << " initial=" << trace.initial_edges << " final=" << trace.final_edges
      << " iterations=" << trace.iterations.size() << '\n';
  for (const IterationRecord& it : trace.iterations) {
    out << "iter " << it.index << " pair " << it.x << ' ' << it.y << " pre "
        << distance_token(it.pre_distance) << " post "
        << distance_token(it.post_distance) << '\n';
    out << "path";
    for (Vertex v : it.path.vertices) out << ' ' << v;
    out << '\n';
    out << "cuts";
    for (std::size_t c : it.segmentation.cuts) out << ' ' << c;
    out << '\n';
    for (const PathEdge& e : it.added)
      out << "add " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  }
}

std::string trace_to_string(const CompletionTrace& trace, Vertex n) {
  std::ostringstream out;
  serialize_trace(trace, n, out);
  return out.str();
}

CompletionTrace parse_trace(std::istream& in, const WeightedGraph& g) {
  CompletionTrace trace;
  std::string line;
  bool have_header = false;
  std::size_t declared_iterations = 0;
  IterationRecord* current = nullptr;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("trace line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "trace") {
      std::string kv;
      long long n_claim = -1;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail("bad header field '" + kv + "'");
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "n") n_claim = std::stoll(val);
        else if (key == "alpha") trace.alpha = parse_rational(val);
        else if (key == "beta") trace.beta = parse_rational(val);
        else if (key == "strategy") trace.strategy = strategy_from_name(val);
        else if (key == "initial") trace.initial_edges = std::stoull(val);
        else if (key == "final") trace.final_edges = std::stoull(val);
        else if (key == "iterations") declared_iterations = std::stoull(val);
        else fail("unknown header key '" + key + "'");
      }
      if (n_claim != g.vertex_count()) fail("trace is for a different graph");
      have_header = true;
    } else if (head == "iter") {
      if (!have_header) fail("iter before header");
      IterationRecord rec;
      std::string kw1, kw2, kw3, pre_tok, post_tok;
      if (!(fields >> rec.index >> kw1 >> rec.x >> rec.y >> kw2 >> pre_tok >>
            kw3 >> post_tok) ||
          kw1 != "pair" || kw2 != "pre" || kw3 != "post")
        fail("malformed iter line");
      rec.pre_distance = parse_distance_token(pre_tok);
      rec.post_distance = parse_distance_token(post_tok);
      trace.iterations.push_back(std::move(rec));
      current = &trace.iterations.back();
    } else if (head == "path") {
      if (!current) fail("path before iter");
      std::vector<Vertex> vs;
      Vertex v;
      while (fields >> v) vs.push_back(v);
      try {
        current->path = path_from_vertices(g, vs);
      } catch (const std::invalid_argument& e) {
        fail(std::string("bad path: ") + e.what());
      }
    } else if (head == "cuts") {
      if (!current) fail("cuts before iter");
      std::size_t c;
      while (fields >> c) current->segmentation.cuts.push_back(c);
      if (!current->segmentation.structurally_valid(current->path.edge_count()))
        fail("cuts do not fit the path");
    } else if (head == "add") {
      if (!current) fail("add before iter");
      PathEdge e;
      if (!(fields >> e.u >> e.v >> e.w)) fail("malformed add line");
      // Recover the edge's position along the recorded path; added edges are
      // always unit segments of it, written in path order.
      bool placed = false;
      for (std::size_t i = 0; i + 1 < current->path.vertices.size(); ++i) {
        if (current->path.vertices[i] == e.u &&
            current->path.vertices[i + 1] == e.v) {
          e.index = i;
          placed = true;
          break;
        }
      }
      if (!placed) fail("added edge is not a path edge");
      current->added.push_back(e);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!have_header) throw ParseError("trace: missing header");
  if (trace.iterations.size() != declared_iterations)
    throw ParseError("trace: iteration count mismatch");
  return trace;
}

CompletionTrace read_trace_file(const std::string& path, const WeightedGraph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_trace(in, g);
}

void write_trace_file(const CompletionTrace& trace, Vertex n,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  serialize_trace(trace, n, out);
}

}  // namespace spanner
