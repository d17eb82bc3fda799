#include "egobw/dynamic.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <string>

#include "egobw/egoscore.hpp"
#include "egobw/parallel.hpp"

namespace egobw {

const ConnectorMap& AffectedMaps::of(VertexId v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw GraphError("vertex not affected by this update");
  return maps[static_cast<std::size_t>(it - vertices.begin())];
}

AffectedMaps local_upt_smap(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) throw GraphError("edge not present");
  AffectedMaps out;
  out.vertices.push_back(u);
  out.vertices.push_back(v);
  for (VertexId w : common_neighbors(g, u, v)) out.vertices.push_back(w);
  out.maps.reserve(out.vertices.size());
  for (VertexId x : out.vertices) out.maps.push_back(build_complete_map(g, x));
  return out;
}

namespace {

// Contribution of pair (x, y) with c known connectors (c >= 1) once one more
// connector appears, minus the contribution before.
double gained_connector(std::uint32_t c) { return 1.0 / (c + 1.0) - 1.0 / c; }

// Score change of every affected vertex caused by the presence of edge
// (u, v). `g` contains the edge and `maps` were built on it. Insertion adds
// these deltas, deletion subtracts them.
std::vector<double> edge_deltas(const Graph& g, const AffectedMaps& maps, VertexId u, VertexId v) {
  const std::span<const VertexId> common(maps.vertices.begin() + 2, maps.vertices.end());
  std::vector<double> deltas;
  deltas.reserve(maps.vertices.size());

  // Endpoint: the other endpoint links every non-adjacent pair of common
  // neighbors, and forms a new pair with each non-common neighbor.
  for (auto [self, other] : {std::pair{u, v}, std::pair{v, u}}) {
    const ConnectorMap& s = maps.of(self);
    double delta = 0.0;
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!g.has_edge(common[i], common[j])) delta += gained_connector(s.connectors(common[i], common[j]));
      }
    }
    for (VertexId x : g.neighbors(self)) {
      if (x == other || std::binary_search(common.begin(), common.end(), x)) continue;
      delta += 1.0 / (s.connectors(other, x) + 1.0);
    }
    deltas.push_back(delta);
  }

  // Common neighbor w: (u, v) stops needing w, and u (resp. v) becomes a
  // connector of v (resp. u) with each non-adjacent shared neighbor.
  std::vector<VertexId> scratch;
  for (VertexId w : common) {
    const ConnectorMap& s = maps.of(w);
    auto wn = g.neighbors(w);
    std::size_t without_edge = 0;
    for (VertexId x : common) without_edge += (x != w && g.has_edge(x, w));
    double delta = -1.0 / (static_cast<double>(without_edge) + 1.0);
    for (auto [hub, far] : {std::pair{u, v}, std::pair{v, u}}) {
      scratch.clear();
      auto hn = g.neighbors(hub);
      std::set_intersection(wn.begin(), wn.end(), hn.begin(), hn.end(), std::back_inserter(scratch));
      for (VertexId x : scratch) {
        if (x == far || g.has_edge(x, far)) continue;
        delta += gained_connector(s.connectors(x, far));
      }
    }
    deltas.push_back(delta);
  }
  return deltas;
}

void check_pair(const Graph& g, VertexId u, VertexId v) {
  if (!g.is_valid(u) || !g.is_valid(v)) throw GraphError("invalid vertex id");
  if (u == v) throw GraphError("self-loops are not allowed");
}

std::vector<ScoreChange> apply(std::vector<double>& scores, const AffectedMaps& maps,
                               const std::vector<double>& deltas, double sign) {
  std::vector<ScoreChange> changes;
  changes.reserve(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    VertexId x = maps.vertices[i];
    double before = scores[x];
    scores[x] += sign * deltas[i];
    changes.push_back({x, before, scores[x]});
  }
  return changes;
}

}  // namespace

std::vector<ScoreChange> local_insert(Graph& g, std::vector<double>& scores, VertexId u, VertexId v) {
  check_pair(g, u, v);
  if (g.has_edge(u, v)) throw GraphError("edge already present");
  g.add_edge(u, v);
  auto maps = local_upt_smap(g, u, v);
  return apply(scores, maps, edge_deltas(g, maps, u, v), +1.0);
}

std::vector<ScoreChange> local_delete(Graph& g, std::vector<double>& scores, VertexId u, VertexId v) {
  check_pair(g, u, v);
  if (!g.has_edge(u, v)) throw GraphError("edge not present");
  // Connector counts are read while the edge still exists.
  auto maps = local_upt_smap(g, u, v);
  auto changes = apply(scores, maps, edge_deltas(g, maps, u, v), -1.0);
  g.remove_edge(u, v);
  return changes;
}

LazyIndex::LazyIndex(Graph g, std::size_t k, unsigned threads)
    : graph_(std::move(g)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("k must be at least 1");
  const std::size_t n = graph_.num_vertices();
  if (threads > 1) {
    auto og = orient(graph_);
    score_ = vertex_pebw(og, threads);
  } else {
    score_ = compute_all_scores(graph_);
  }
  stale_.assign(n, 0);
  in_result_.assign(n, 0);
  version_.assign(n, 0);
  auto ranked = rank_all(graph_, score_);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    VertexId v = ranked[i].vertex;
    if (i < k_) {
      in_result_[v] = 1;
      members_.insert(member_key(v));
    } else {
      outside_.push({score_[v], graph_.original_id(v), v, version_[v]});
    }
  }
}

LazyIndex::MemberKey LazyIndex::member_key(VertexId v) const {
  return {score_[v], std::numeric_limits<std::uint64_t>::max() - graph_.original_id(v), v};
}

void LazyIndex::recompute(VertexId v) {
  double exact = 0.0;
  // Degree <= 1 has nothing to compute.
  if (graph_.degree(v) > 1) {
    exact = exact_score(graph_, v);
    ++recomputations_;
  }
  if (in_result_[v]) {
    members_.erase(member_key(v));
    score_[v] = exact;
    members_.insert(member_key(v));
    stale_[v] = 0;
  } else {
    set_outside(v, exact, false);
  }
}

void LazyIndex::set_outside(VertexId v, double key, bool stale) {
  score_[v] = key;
  stale_[v] = stale ? 1 : 0;
  ++version_[v];
  outside_.push({key, graph_.original_id(v), v, version_[v]});
}

double LazyIndex::stored_min() const {
  if (members_.empty()) return std::numeric_limits<double>::infinity();
  return std::get<0>(*members_.begin());
}

// Outside vertex whose score may have grown: recompute only if its static
// bound could beat the result, else keep the bound as its key.
void LazyIndex::refresh_gated(VertexId v) {
  const double bound = static_bound(graph_, v);
  if (bound > stored_min()) {
    recompute(v);
  } else {
    set_outside(v, bound, bound != 0.0);
  }
}

VertexId LazyIndex::resolve_worst_member() {
  while (true) {
    VertexId v = std::get<2>(*members_.begin());
    if (!stale_[v]) return v;
    recompute(v);
  }
}

std::optional<LazyIndex::Candidate> LazyIndex::peek_outside() {
  while (!outside_.empty()) {
    const Candidate top = outside_.top();
    if (!in_result_[top.vertex] && top.version == version_[top.vertex]) return top;
    outside_.pop();
  }
  return std::nullopt;
}

void LazyIndex::repair() {
  if (members_.empty()) return;
  while (true) {
    auto best = peek_outside();
    // Outside keys bound scores from above and member keys from below, so
    // nothing outside can displace a member once this fails.
    if (!best || !(best->key > stored_min())) return;
    if (stale_[best->vertex]) {
      outside_.pop();
      recompute(best->vertex);
      continue;
    }
    VertexId worst = resolve_worst_member();
    if (!(score_[best->vertex] > score_[worst])) return;
    members_.erase(member_key(worst));
    in_result_[worst] = 0;
    set_outside(worst, score_[worst], false);
    in_result_[best->vertex] = 1;
    ++version_[best->vertex];
    members_.insert(member_key(best->vertex));
  }
}

void LazyIndex::insert_edge(VertexId u, VertexId v) {
  check_pair(graph_, u, v);
  graph_.add_edge(u, v);
  // Endpoints may move either way; their static bounds grew.
  for (VertexId x : {u, v}) {
    if (in_result_[x]) recompute(x);
    else refresh_gated(x);
  }
  // Common neighbors can only lose score, so outsiders keep valid keys.
  for (VertexId x : common_neighbors(graph_, u, v)) {
    if (in_result_[x]) recompute(x);
    else stale_[x] = 1;
  }
  repair();
}

void LazyIndex::remove_edge(VertexId u, VertexId v) {
  check_pair(graph_, u, v);
  auto common = common_neighbors(graph_, u, v);
  graph_.remove_edge(u, v);
  for (VertexId x : {u, v}) {
    if (in_result_[x]) recompute(x);
    else refresh_gated(x);
  }
  // Common neighbors can only gain score: members keep a valid lower bound,
  // outsiders need a fresh upper bound.
  for (VertexId x : common) {
    if (in_result_[x]) stale_[x] = 1;
    else refresh_gated(x);
  }
  repair();
}

std::vector<ScoredVertex> LazyIndex::results() {
  std::vector<VertexId> stale_members;
  for (const auto& key : members_) {
    if (stale_[std::get<2>(key)]) stale_members.push_back(std::get<2>(key));
  }
  for (VertexId v : stale_members) recompute(v);
  std::vector<ScoredVertex> out;
  for (const auto& key : members_) out.push_back({std::get<2>(key), std::get<0>(key)});
  std::sort(out.begin(), out.end(), [this](const ScoredVertex& a, const ScoredVertex& b) {
    if (a.score != b.score) return a.score > b.score;
    return graph_.original_id(a.vertex) < graph_.original_id(b.vertex);
  });
  return out;
}

std::vector<UpdateOp> parse_update_stream(std::istream& in) {
  std::vector<UpdateOp> ops;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op) || op.front() == '#') continue;
    UpdateOp parsed{};
    parsed.line = line_no;
    if (op == "+") parsed.kind = UpdateOp::Kind::kInsert;
    else if (op == "-") parsed.kind = UpdateOp::Kind::kDelete;
    else throw ParseError(line_no, "expected '+' or '-', got '" + op + "'");
    std::string a, b, extra;
    if (!(fields >> a >> b)) throw ParseError(line_no, "expected two vertex ids");
    if (fields >> extra) throw ParseError(line_no, "trailing tokens after update");
    for (auto [text, target] : {std::pair{&a, &parsed.u}, std::pair{&b, &parsed.v}}) {
      std::size_t used = 0;
      try {
        if (text->empty() || text->front() == '-' || text->front() == '+') throw std::invalid_argument("sign");
        *target = std::stoull(*text, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected a non-negative integer, got '" + *text + "'");
      }
      if (used != text->size()) {
        throw ParseError(line_no, "expected a non-negative integer, got '" + *text + "'");
      }
    }
    ops.push_back(parsed);
  }
  return ops;
}

}  // namespace egobw
