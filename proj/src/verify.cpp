#include "egobw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "egobw/dynamic.hpp"
#include "egobw/egoscore.hpp"
#include "egobw/generate.hpp"
#include "egobw/parallel.hpp"
#include "egobw/reference.hpp"
#include "egobw/topk.hpp"

namespace egobw::verify {

namespace {

constexpr double kTolerance = 1e-9;
constexpr double kProbabilities[] = {0.05, 0.2, 0.5};

bool close(double a, double b) { return std::abs(a - b) <= kTolerance * std::max(1.0, std::abs(b)); }

std::string describe(const CorpusGraph& c) {
  std::ostringstream s;
  s << "graph(seed=" << c.seed << ", n=" << c.graph.num_vertices() << ", p=" << c.p << ")";
  return s.str();
}

std::vector<double> oracle_scores(const Graph& g) {
  std::vector<double> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out[v] = reference::brute_force_cb(g, v).value();
  return out;
}

std::vector<double> top_scores(std::vector<double> scores, std::size_t k) {
  std::sort(scores.begin(), scores.end(), std::greater<>());
  scores.resize(std::min(k, scores.size()));
  return scores;
}

bool same_scores(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!close(a[i], b[i])) return false;
  }
  return true;
}

std::vector<double> scores_of(const std::vector<ScoredVertex>& entries) {
  std::vector<double> out;
  for (const auto& e : entries) out.push_back(e.score);
  return out;
}

std::vector<VertexId> vertices_of(const std::vector<ScoredVertex>& entries) {
  std::vector<VertexId> out;
  for (const auto& e : entries) out.push_back(e.vertex);
  return out;
}

std::vector<std::size_t> query_sizes(std::size_t n) {
  std::vector<std::size_t> ks;
  for (std::size_t k : {std::size_t{1}, std::size_t{5}, n / 2}) {
    k = std::clamp<std::size_t>(k, 1, n);
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  return ks;
}

PropertyResult oracle_equivalence(const std::vector<CorpusGraph>& corpus) {
  PropertyResult r;
  r.name = "oracle_equivalence";
  for (const auto& c : corpus) {
    const Graph& g = c.graph;
    const std::size_t n = g.num_vertices();
    std::vector<double> oracle(n);
    for (VertexId v = 0; v < n; ++v) {
      auto o = reference::brute_force_cb(g, v);
      r.check(o.by_formula == o.by_path_counting, describe(c) + " formula and path counting disagree");
      oracle[v] = o.value();
    }
    auto sequential = compute_all_scores(g);
    auto base = base_search(g, n);
    auto opt = opt_search(g, n);
    for (VertexId v = 0; v < n; ++v) {
      r.check(close(sequential[v], oracle[v]), describe(c) + " sequential score of " + std::to_string(v));
      r.check(close(exact_score(g, v), oracle[v]), describe(c) + " direct map score of " + std::to_string(v));
    }
    for (const auto* result : {&base, &opt}) {
      r.check(result->entries.size() == n, describe(c) + " k=n search returned too few vertices");
      for (const auto& e : result->entries) {
        r.check(close(e.score, oracle[e.vertex]), describe(c) + " search score of " + std::to_string(e.vertex));
      }
    }
  }
  return r;
}

PropertyResult bound_properties(const std::vector<CorpusGraph>& corpus) {
  PropertyResult r;
  r.name = "bound_properties";
  for (const auto& c : corpus) {
    const Graph& g = c.graph;
    auto oracle = oracle_scores(g);
    std::vector<double> last(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) last[v] = static_bound(g, v);
    for (std::size_t k : query_sizes(g.num_vertices())) {
      std::vector<double> previous = last;
      opt_search(g, k, kDefaultTheta, [&](VertexId v, double bound) {
        const std::string where = describe(c) + " vertex " + std::to_string(v);
        r.check(bound >= oracle[v] - kTolerance, where + " bound below score");
        r.check(bound <= static_bound(g, v) + kTolerance, where + " bound above static bound");
        r.check(bound <= previous[v] + kTolerance, where + " bound increased");
        previous[v] = bound;
      });
    }
  }
  return r;
}

PropertyResult topk_correctness(const std::vector<CorpusGraph>& corpus) {
  PropertyResult r;
  r.name = "topk_correctness";
  for (const auto& c : corpus) {
    const Graph& g = c.graph;
    auto oracle = oracle_scores(g);
    for (std::size_t k : query_sizes(g.num_vertices())) {
      const std::string where = describe(c) + " k=" + std::to_string(k);
      auto expected = top_scores(oracle, k);
      auto base = base_search(g, k);
      r.check(same_scores(scores_of(base.entries), expected), where + " base scores");
      std::vector<VertexId> first;
      for (double theta : {1.0, 1.05, 1.3}) {
        auto opt = opt_search(g, k, theta);
        r.check(same_scores(scores_of(opt.entries), expected), where + " opt scores");
        auto members = vertices_of(opt.entries);
        if (first.empty()) first = members;
        r.check(members == first, where + " result set depends on theta");
      }
      r.check(vertices_of(base.entries) == first, where + " base and opt pick different vertices");
    }
  }
  return r;
}

PropertyResult pruning_counts(const std::vector<CorpusGraph>& corpus) {
  PropertyResult r;
  r.name = "pruning_counts";
  for (const auto& c : corpus) {
    const Graph& g = c.graph;
    for (std::size_t k : query_sizes(g.num_vertices())) {
      auto base = base_search(g, k).exact_computations;
      auto opt = opt_search(g, k).exact_computations;
      const std::string where = describe(c) + " k=" + std::to_string(k);
      r.check(opt <= base, where + " opt computed more than base");
      r.check(base <= g.num_vertices(), where + " base computed more than n");
    }
  }
  return r;
}

PropertyResult dynamic_local(const std::vector<CorpusGraph>& corpus, std::size_t updates) {
  PropertyResult r;
  r.name = "dynamic_local";
  for (const auto& c : corpus) {
    Graph g = c.graph;
    std::mt19937_64 rng(c.seed ^ 0x9e3779b97f4a7c15ull);
    auto scores = compute_all_scores(g);
    for (std::size_t step = 0; step < updates; ++step) {
      auto op = random_update(g, step % 2 == 0, rng);
      if (!op) continue;
      const auto before = scores;
      auto common = common_neighbors(g, op->u, op->v);
      if (op->insert) local_insert(g, scores, op->u, op->v);
      else local_delete(g, scores, op->u, op->v);
      auto fresh = oracle_scores(g);
      const std::string where = describe(c) + " step " + std::to_string(step);
      for (VertexId x = 0; x < g.num_vertices(); ++x) {
        r.check(close(scores[x], fresh[x]), where + " score of " + std::to_string(x));
        bool affected = x == op->u || x == op->v || std::binary_search(common.begin(), common.end(), x);
        r.check(affected || close(fresh[x], before[x]), where + " unaffected vertex changed");
      }
      for (VertexId w : common) {
        bool ok = op->insert ? fresh[w] <= before[w] + kTolerance : fresh[w] >= before[w] - kTolerance;
        r.check(ok, where + " common neighbor moved the wrong way");
      }
    }
  }
  return r;
}

PropertyResult dynamic_lazy(const std::vector<CorpusGraph>& corpus, std::size_t updates) {
  PropertyResult r;
  r.name = "dynamic_lazy";
  for (const auto& c : corpus) {
    for (std::size_t k : {1, 5, 10}) {
      LazyIndex index(c.graph, k);
      Graph g = c.graph;
      std::mt19937_64 rng(c.seed ^ 0x9e3779b97f4a7c15ull);
      for (std::size_t step = 0; step < updates; ++step) {
        auto op = random_update(g, step % 2 == 0, rng);
        if (!op) continue;
        if (op->insert) {
          g.add_edge(op->u, op->v);
          index.insert_edge(op->u, op->v);
        } else {
          g.remove_edge(op->u, op->v);
          index.remove_edge(op->u, op->v);
        }
        auto expected = top_scores(oracle_scores(g), k);
        r.check(same_scores(scores_of(index.results()), expected),
                describe(c) + " k=" + std::to_string(k) + " step " + std::to_string(step));
      }
    }
  }
  return r;
}

PropertyResult parallel_agreement(const std::vector<CorpusGraph>& corpus) {
  PropertyResult r;
  r.name = "parallel_agreement";
  for (const auto& c : corpus) {
    const Graph& g = c.graph;
    auto og = orient(g);
    EgoWorkspace ws(g);
    triangle_pass(og, ws);
    auto sequential = compute_all_scores(g);
    for (unsigned threads : {1u, 2u, 4u}) {
      for (auto* variant : {&vertex_pebw, &edge_pebw}) {
        ParallelStats stats;
        auto scores = variant(og, threads, &stats);
        const std::string where = describe(c) + " threads=" + std::to_string(threads);
        r.check(scores == sequential, where + " scores differ from sequential");
        r.check(stats.triangles == ws.triangles_found(), where + " triangle count differs");
      }
    }
  }
  return r;
}

}  // namespace

void PropertyResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  if (failures == 0) first_failure = what;
  ++failures;
}

std::vector<CorpusGraph> random_corpus(std::size_t trials, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusGraph> corpus;
  corpus.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t n = max_n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    double p = kProbabilities[t % 3];
    std::uint64_t graph_seed = rng();
    corpus.push_back({erdos_renyi(n, p, graph_seed), p, graph_seed});
  }
  return corpus;
}

std::optional<EdgeUpdate> random_update(const Graph& g, bool insert, std::mt19937_64& rng) {
  const std::size_t n = g.num_vertices();
  if (insert) {
    std::vector<std::pair<VertexId, VertexId>> absent;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) absent.emplace_back(u, v);
      }
    }
    if (absent.empty()) return std::nullopt;
    auto [u, v] = absent[std::uniform_int_distribution<std::size_t>(0, absent.size() - 1)(rng)];
    return EdgeUpdate{true, u, v};
  }
  if (g.num_edges() == 0) return std::nullopt;
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, g.num_edges() - 1)(rng);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      if (pick-- == 0) return EdgeUpdate{false, u, v};
    }
  }
  return std::nullopt;
}

bool run_verify(const VerifyOptions& options, std::ostream& out) {
  const auto corpus = random_corpus(options.trials, options.max_n, options.seed);
  out << "# verify\ttrials=" << options.trials << "\tmax_n=" << options.max_n << "\tseed=" << options.seed
      << "\n";
  std::vector<std::function<PropertyResult()>> suite = {
      [&] { return oracle_equivalence(corpus); },
      [&] { return bound_properties(corpus); },
      [&] { return topk_correctness(corpus); },
      [&] { return pruning_counts(corpus); },
      [&] { return dynamic_local(corpus, options.updates_per_graph); },
      [&] { return dynamic_lazy(corpus, options.updates_per_graph); },
      [&] { return parallel_agreement(corpus); },
  };
  bool all = true;
  for (const auto& property : suite) {
    PropertyResult r = property();
    all = all && r.passed();
    out << (r.passed() ? "PASS" : "FAIL") << '\t' << r.name << "\tchecks=" << r.checks
        << "\tfailures=" << r.failures;
    if (!r.passed()) out << '\t' << r.first_failure;
    out << '\n';
  }
  return all;
}

}  // namespace egobw::verify
