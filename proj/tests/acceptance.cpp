// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "egobw/cli.hpp"
#include "egobw/dynamic.hpp"
#include "egobw/egoscore.hpp"
#include "egobw/generate.hpp"
#include "egobw/graph.hpp"
#include "egobw/parallel.hpp"
#include "egobw/reference.hpp"
#include "egobw/topk.hpp"
#include "egobw/verify.hpp"

using namespace egobw;
using reference::Rational;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr std::size_t kCorpusSize = 120;
constexpr std::size_t kMaxN = 64;
constexpr double kTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

bool close(double a, double b) { return std::abs(a - b) <= kTol * std::max(1.0, std::abs(b)); }

const std::vector<verify::CorpusGraph>& corpus() {
  static const auto graphs = verify::random_corpus(kCorpusSize, kMaxN, kCorpusSeed);
  return graphs;
}

std::vector<double> oracle(const Graph& g) {
  std::vector<double> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out[v] = reference::brute_force_cb(g, v).value();
  return out;
}

std::vector<double> top(std::vector<double> s, std::size_t k) {
  std::sort(s.begin(), s.end(), std::greater<>());
  s.resize(std::min(k, s.size()));
  return s;
}

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!close(a[i], b[i])) return false;
  }
  return true;
}

std::vector<double> scores_of(const std::vector<ScoredVertex>& e) {
  std::vector<double> out;
  for (const auto& x : e) out.push_back(x.score);
  return out;
}

std::vector<VertexId> ids_of(const std::vector<ScoredVertex>& e) {
  std::vector<VertexId> out;
  for (const auto& x : e) out.push_back(x.vertex);
  return out;
}

std::vector<std::size_t> ks_for(std::size_t n) {
  std::vector<std::size_t> ks;
  for (std::size_t k : {std::size_t{1}, std::size_t{5}, n / 2}) {
    k = std::clamp<std::size_t>(k, 1, n);
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  return ks;
}

std::string where(const verify::CorpusGraph& c) {
  return "seed=" + std::to_string(c.seed) + " n=" + std::to_string(c.graph.num_vertices());
}

// a=0 b=1 c=2 d=3 g=6 h=7 i=8
Graph ego_of_d() {
  std::vector<std::pair<OriginalId, OriginalId>> edges = {
      {3, 0}, {3, 1}, {3, 2}, {3, 6}, {3, 7}, {3, 8}, {0, 1},
      {0, 2}, {1, 2}, {2, 6}, {2, 7}, {6, 8}, {7, 8}};
  return Graph::from_edges(edges);
}

Outcome ac1_golden() {
  Outcome o;
  const Graph g = ego_of_d();
  const VertexId d = *g.find_vertex(3);
  const double expected = 14.0 / 3.0;
  o.expect(g.num_vertices() == 7 && g.num_edges() == 13, "fixture shape");

  EgoWorkspace ws(g);
  const double via_cal = ego_bw_cal(ws, d);
  o.expect(std::abs(via_cal - expected) < 1e-12, "ego_bw_cal");
  o.expect(std::abs(score_from_map(ws.map(d), g) - expected) < 1e-12, "score_from_map");
  auto brute = reference::brute_force_cb(g, d);
  o.expect(brute.by_formula == Rational(14, 3), "brute force formula");
  o.expect(brute.by_path_counting == Rational(14, 3), "brute force path counting");
  auto og = orient(g);
  for (unsigned t : {1u, 2u, 4u}) {
    o.expect(std::abs(vertex_pebw(og, t)[d] - expected) < 1e-12, "vertex_pebw");
    o.expect(std::abs(edge_pebw(og, t)[d] - expected) < 1e-12, "edge_pebw");
  }

  const ConnectorMap direct = build_complete_map(g, d);
  for (const ConnectorMap* m : {&ws.map(d), &direct}) {
    std::size_t zeros = 0, ones = 0, twos = 0, other = 0;
    for (const auto& e : m->sorted_entries()) {
      if (e.val == 0) ++zeros;
      else if (e.val == 1) ++ones;
      else if (e.val == 2) ++twos;
      else ++other;
    }
    const std::size_t pairs = 6 * 5 / 2;
    o.expect(zeros == 7 && ones == 4 && twos == 2 && other == 0, "map value counts");
    o.expect(pairs - m->size() == 2, "absent pairs");
    auto g_id = *g.find_vertex(6), h_id = *g.find_vertex(7), c_id = *g.find_vertex(2), i_id = *g.find_vertex(8);
    o.expect(m->find(c_id, i_id) == 2u && m->find(g_id, h_id) == 2u, "pairs with two connectors");
  }
  return o;
}

Outcome ac2_oracle_equivalence() {
  Outcome o;
  for (const auto& c : corpus()) {
    const Graph& g = c.graph;
    const std::size_t n = g.num_vertices();
    auto want = oracle(g);
    for (const auto& r : {base_search(g, n), opt_search(g, n)}) {
      o.expect(r.entries.size() == n, where(c) + " missing vertices");
      for (const auto& e : r.entries) o.expect(close(e.score, want[e.vertex]), where(c) + " score mismatch");
    }
  }
  return o;
}

Outcome ac3_topk() {
  Outcome o;
  for (const auto& c : corpus()) {
    const Graph& g = c.graph;
    auto want = oracle(g);
    for (std::size_t k : ks_for(g.num_vertices())) {
      auto expected = top(want, k);
      auto base = base_search(g, k);
      o.expect(same(scores_of(base.entries), expected), where(c) + " base multiset k=" + std::to_string(k));
      auto reference_set = ids_of(opt_search(g, k, 1.0).entries);
      for (double theta : {1.0, 1.05, 1.3}) {
        auto opt = opt_search(g, k, theta);
        o.expect(same(scores_of(opt.entries), expected), where(c) + " opt multiset k=" + std::to_string(k));
        o.expect(ids_of(opt.entries) == reference_set, where(c) + " set varies with theta");
      }
    }
  }
  return o;
}

Outcome ac4_pruning(std::string& stats) {
  Outcome o;
  std::size_t large = 0, strict = 0;
  for (const auto& c : corpus()) {
    const Graph& g = c.graph;
    const std::size_t n = g.num_vertices();
    std::size_t base_total = 0, opt_total = 0;
    for (std::size_t k : ks_for(n)) {
      auto base = base_search(g, k).exact_computations;
      auto opt = opt_search(g, k).exact_computations;
      o.expect(opt <= base && base <= n, where(c) + " k=" + std::to_string(k) + " count order");
      base_total += base;
      opt_total += opt;
    }
    if (n >= 32) {
      ++large;
      strict += opt_total < base_total;
    }
  }
  o.expect(large > 0, "no instance with n >= 32");
  o.expect(2 * strict >= large, "strict improvement on fewer than half of the n >= 32 instances");
  stats = "strict " + std::to_string(strict) + "/" + std::to_string(large);
  return o;
}

Outcome ac5_bounds() {
  Outcome o;
  std::size_t observed = 0;
  for (const auto& c : corpus()) {
    const Graph& g = c.graph;
    auto want = oracle(g);
    for (std::size_t k : ks_for(g.num_vertices())) {
      for (double theta : {1.0, 1.05, 1.3}) {
        std::vector<double> last(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v) last[v] = static_bound(g, v);
        opt_search(g, k, theta, [&](VertexId v, double ub) {
          ++observed;
          o.expect(want[v] <= ub + kTol, where(c) + " bound below score");
          o.expect(ub <= static_bound(g, v) + kTol, where(c) + " bound above static bound");
          o.expect(ub <= last[v] + kTol, where(c) + " bound increased");
          last[v] = ub;
        });
      }
    }
  }
  o.expect(observed > 0, "no bound refresh observed");
  return o;
}

// Graphs and op streams shared by the two maintenance criteria.
struct Stream {
  Graph start;
  std::vector<verify::EdgeUpdate> ops;
};

std::vector<Stream> update_streams() {
  std::vector<Stream> out;
  const std::pair<std::size_t, double> shapes[] = {{24, 0.2}, {48, 0.1}, {64, 0.05}};
  std::uint64_t seed = 7;
  for (auto [n, p] : shapes) {
    Stream s{erdos_renyi(n, p, seed), {}};
    Graph g = s.start;
    std::mt19937_64 rng(seed++);
    for (std::size_t step = 0; s.ops.size() < 1000; ++step) {
      auto op = verify::random_update(g, step % 2 == 0, rng);
      if (!op) continue;
      if (op->insert) g.add_edge(op->u, op->v);
      else g.remove_edge(op->u, op->v);
      s.ops.push_back(*op);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Outcome ac6_local(const std::vector<Stream>& streams) {
  Outcome o;
  for (const auto& s : streams) {
    Graph g = s.start;
    auto scores = compute_all_scores(g);
    auto before = oracle(g);
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
      const auto& op = s.ops[i];
      auto common = common_neighbors(g, op.u, op.v);
      if (op.insert) local_insert(g, scores, op.u, op.v);
      else local_delete(g, scores, op.u, op.v);
      auto after = oracle(g);
      const std::string at = "op " + std::to_string(i);
      for (VertexId x = 0; x < g.num_vertices(); ++x) {
        o.expect(close(scores[x], after[x]), at + " score mismatch");
        bool local = x == op.u || x == op.v || std::binary_search(common.begin(), common.end(), x);
        o.expect(local || after[x] == before[x], at + " change outside N(u,v)");
      }
      for (VertexId w : common) {
        o.expect(op.insert ? after[w] <= before[w] + kTol : after[w] >= before[w] - kTol,
                 at + " common neighbor moved the wrong way");
      }
      before = std::move(after);
    }
  }
  return o;
}

Outcome ac7_lazy(const std::vector<Stream>& streams) {
  Outcome o;
  for (const auto& s : streams) {
    std::vector<std::vector<double>> truth;
    Graph g = s.start;
    for (const auto& op : s.ops) {
      if (op.insert) g.add_edge(op.u, op.v);
      else g.remove_edge(op.u, op.v);
      truth.push_back(oracle(g));
    }
    for (std::size_t k : {1, 5, 10}) {
      LazyIndex index(s.start, k);
      for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const auto& op = s.ops[i];
        if (op.insert) index.insert_edge(op.u, op.v);
        else index.remove_edge(op.u, op.v);
        o.expect(same(scores_of(index.results()), top(truth[i], k)),
                 "k=" + std::to_string(k) + " op " + std::to_string(i));
      }
    }
  }

  // f=5 i=8 j=9 k=10
  std::vector<std::pair<OriginalId, OriginalId>> edges = {{10, 5}, {10, 9}, {8, 5}, {8, 9}};
  Graph g = Graph::from_edges(edges);
  VertexId i = *g.find_vertex(8), k = *g.find_vertex(10);
  LazyIndex index(g, g.num_vertices());
  o.expect(index.stored_score(k) == 1.0, "fixture C_B(k) before insert");
  index.insert_edge(i, k);
  double after = -1;
  for (const auto& e : index.results()) {
    if (e.vertex == k) after = e.score;
  }
  o.expect(after == 0.5, "fixture C_B(k) after insert");
  return o;
}

std::size_t count_triangles(const Graph& g) {
  std::size_t t = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      for (VertexId w : g.neighbors(v)) {
        if (w > v && g.has_edge(u, w)) ++t;
      }
    }
  }
  return t;
}

Outcome ac8_parallel() {
  Outcome o;
  std::vector<Graph> graphs;
  for (const auto& c : corpus()) graphs.push_back(c.graph);
  graphs.push_back(power_law(10000, 10.0, 2.5, 99));
  for (const auto& g : graphs) {
    const auto sequential = compute_all_scores(g);
    const auto og = orient(g);
    const std::size_t triangles = count_triangles(g);
    for (auto* variant : {&vertex_pebw, &edge_pebw}) {
      for (unsigned t : {1u, 2u, 4u, 8u}) {
        ParallelStats stats;
        auto got = variant(og, t, &stats);
        bool identical = got.size() == sequential.size() &&
                         std::memcmp(got.data(), sequential.data(), got.size() * sizeof(double)) == 0;
        o.expect(identical, "n=" + std::to_string(g.num_vertices()) + " threads=" + std::to_string(t) +
                                " not byte-identical");
        o.expect(stats.triangles == triangles, "triangle counter mismatch");
      }
    }
  }
  return o;
}

// Pair dependencies from distances and path counts of every source.
std::vector<double> naive_betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, -1));
  std::vector<std::vector<double>> paths(n, std::vector<double>(n, 0.0));
  for (VertexId s = 0; s < n; ++s) {
    std::deque<VertexId> queue{s};
    dist[s][s] = 0;
    paths[s][s] = 1;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (dist[s][y] < 0) {
          dist[s][y] = dist[s][x] + 1;
          queue.push_back(y);
        }
        if (dist[s][y] == dist[s][x] + 1) paths[s][y] += paths[s][x];
      }
    }
  }
  std::vector<double> out(n, 0.0);
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (dist[s][t] < 0) continue;
      for (VertexId v = 0; v < n; ++v) {
        if (v == s || v == t || dist[s][v] < 0 || dist[v][t] < 0) continue;
        if (dist[s][v] + dist[v][t] == dist[s][t]) out[v] += paths[s][v] * paths[v][t] / paths[s][t];
      }
    }
  }
  return out;
}

double compare_overlap(const std::vector<std::pair<OriginalId, OriginalId>>& edges, std::size_t k,
                       Outcome& o, const std::string& label) {
  auto path = std::filesystem::temp_directory_path() / ("egobw_acceptance_" + label + ".txt");
  {
    std::ofstream f(path);
    for (auto [a, b] : edges) f << a << ' ' << b << '\n';
  }
  std::ostringstream out, err;
  int rc = cli::run({"compare", "--k", std::to_string(k), path.string()}, out, err);
  std::filesystem::remove(path);
  o.expect(rc == 0, label + " compare exit code");
  std::istringstream lines(out.str());
  std::string line;
  double overlap = -1;
  while (std::getline(lines, line)) {
    if (line.rfind("overlap\t", 0) == 0) overlap = std::stod(line.substr(8));
  }
  o.expect(overlap >= 0.0 && overlap <= 1.0, label + " overlap out of range");
  return overlap;
}

Outcome ac9_brandes() {
  Outcome o;
  std::vector<Graph> graphs;
  const std::pair<std::size_t, double> shapes[] = {{30, 0.1}, {60, 0.05}, {100, 0.03}, {150, 0.05}, {200, 0.02},
                                                   {200, 0.1}};
  std::uint64_t seed = 1;
  for (auto [n, p] : shapes) graphs.push_back(erdos_renyi(n, p, seed++));
  for (const auto& c : corpus()) graphs.push_back(c.graph);
  for (const auto& g : graphs) {
    auto fast = reference::brandes_betweenness(g);
    auto slow = naive_betweenness(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      o.expect(close(fast[v], slow[v]), "n=" + std::to_string(g.num_vertices()) + " vertex " + std::to_string(v));
    }
  }

  std::vector<std::pair<OriginalId, OriginalId>> path3 = {{1, 2}, {2, 3}};
  std::vector<std::pair<OriginalId, OriginalId>> path7;
  for (OriginalId v = 1; v < 7; ++v) path7.emplace_back(v, v + 1);
  std::vector<std::pair<OriginalId, OriginalId>> star;
  for (OriginalId v = 1; v <= 6; ++v) star.emplace_back(0, v);
  o.expect(compare_overlap(path3, 1, o, "path3") == 1.0, "path3 overlap");
  o.expect(compare_overlap(path7, 1, o, "path7") == 1.0, "path7 overlap");
  o.expect(compare_overlap(star, 1, o, "star") == 1.0, "star overlap");
  auto random = erdos_renyi(80, 0.08, 5).canonical_edges();
  compare_overlap(random, 10, o, "random");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome(std::string&)> run;
  };
  std::vector<Stream> streams;
  const std::vector<Criterion> criteria = {
      {"AC1 golden ego network of d: 14/3 on every route, map 7/4/2/2", 1, [](auto&) { return ac1_golden(); }},
      {"AC2 k=n searches equal rational oracle", 30, [](auto&) { return ac2_oracle_equivalence(); }},
      {"AC3 top-k multisets equal oracle, sets theta-independent", 30, [](auto&) { return ac3_topk(); }},
      {"AC4 exact computations opt <= base <= n", 30, [](auto& s) { return ac4_pruning(s); }},
      {"AC5 refreshed bounds within [score, static] and non-increasing", 30, [](auto&) { return ac5_bounds(); }},
      {"AC6 local updates equal recomputation over 3x1000 ops", 60,
       [&](auto&) {
         streams = update_streams();
         return ac6_local(streams);
       }},
      {"AC7 lazy top-k equals oracle over 3x1000 ops, k in {1,5,10}", 60, [&](auto&) { return ac7_lazy(streams); }},
      {"AC8 parallel scores byte-identical, threads 1..8, incl. 10^4 power-law", 120,
       [](auto&) { return ac8_parallel(); }},
      {"AC9 Brandes equals naive counting; compare overlap on path/star", 60, [](auto&) { return ac9_brandes(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(note);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) {
      o.ok = false;
      o.detail = "over time limit";
    }
    failed += !o.ok;
    std::printf("%s  %s  (%.2fs / %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, seconds, c.limit_seconds,
                note.empty() ? "" : "  ", note.c_str());
    if (!o.ok) std::printf("      %s\n", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
