#include "egobw/egoscore.hpp"

#include <algorithm>
#include <cstdint>

namespace egobw {

namespace {

std::uint64_t pair_count(std::size_t degree) {
  auto d = static_cast<std::uint64_t>(degree);
  return d < 2 ? 0 : d * (d - 1) / 2;
}

double evaluate(const ConnectorMap& s, std::size_t degree) {
  const std::uint64_t pairs = pair_count(degree);
  const std::uint64_t known = s.size();
  if (known > pairs) throw ConnectorMapError("map holds more pairs than the owner has");
  double fractional = 0.0;
  const auto& hist = s.histogram();
  for (std::size_t c = 1; c < hist.size(); ++c) {
    if (hist[c] != 0) fractional += static_cast<double>(hist[c]) / static_cast<double>(c + 1);
  }
  return static_cast<double>(pairs - known) + fractional;
}

}  // namespace

double static_bound(std::size_t degree) { return static_cast<double>(pair_count(degree)); }

double static_bound(const Graph& g, VertexId u) { return static_bound(g.degree(u)); }

double dynamic_bound(const ConnectorMap& s, std::size_t degree) { return evaluate(s, degree); }

double dynamic_bound(const ConnectorMap& s, const Graph& g) {
  return evaluate(s, g.degree(s.owner()));
}

double score_from_map(const ConnectorMap& s, const Graph& g) {
  return evaluate(s, g.degree(s.owner()));
}

EgoWorkspace::EgoWorkspace(const Graph& g)
    : graph_(&g), processed_(g.num_vertices(), 0), slot_offset_(g.num_vertices() + 1, 0) {
  const std::size_t n = g.num_vertices();
  maps_.reserve(n);
  for (VertexId v = 0; v < n; ++v) maps_.emplace_back(v);
  for (VertexId v = 0; v < n; ++v) slot_offset_[v + 1] = slot_offset_[v] + g.degree(v);
  partners_.resize(slot_offset_[n]);
  scratch_.marker.assign(n, 0);
}

std::size_t EgoWorkspace::edge_slot(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  auto nbrs = graph_->neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  return slot_offset_[a] + static_cast<std::size_t>(it - nbrs.begin());
}

std::span<const VertexId> EgoWorkspace::partners(VertexId a, VertexId b) const {
  if (!graph_->has_edge(a, b)) return {};
  return partners_[edge_slot(a, b)];
}

void EgoWorkspace::touch(VertexId v) {
  if (maps_[v].state() == MapState::kEmpty) maps_[v].set_state(MapState::kPartial);
}

void EgoWorkspace::link_apex(VertexId x, VertexId y, VertexId apex) {
  auto& list = partners_[edge_slot(x, y)];
  for (VertexId other : list) {
    if (!graph_->has_edge(apex, other)) {
      maps_[x].record_connector(apex, other);
      maps_[y].record_connector(apex, other);
    }
  }
  list.push_back(apex);
}

void EgoWorkspace::record_triangle(VertexId a, VertexId b, VertexId c) {
  maps_[a].mark_adjacent(b, c);
  maps_[b].mark_adjacent(a, c);
  maps_[c].mark_adjacent(a, b);
  touch(a);
  touch(b);
  touch(c);
  link_apex(a, b, c);
  link_apex(a, c, b);
  link_apex(b, c, a);
  ++triangles_;
}

double EgoWorkspace::finish(VertexId u) {
  processed_[u] = 1;
  maps_[u].set_state(MapState::kComplete);
  ++computations_;
  return score_from_map(maps_[u], *graph_);
}

double EgoWorkspace::compute(VertexId u) {
  if (!graph_->is_valid(u)) throw GraphError("invalid vertex id");
  if (processed_[u]) return score_from_map(maps_[u], *graph_);
  if (graph_->degree(u) <= 1) return finish(u);

  auto& done = scratch_.done_neighbors;
  auto& pending = scratch_.pending_neighbors;
  done.clear();
  pending.clear();
  for (VertexId w : graph_->neighbors(u)) (processed_[w] ? done : pending).push_back(w);

  // Triangles through u with a scored vertex were found when that vertex was
  // scored; only triangles inside the pending set are new.
  auto& marker = scratch_.marker;
  for (VertexId i : pending) marker[i] = 1;
  for (VertexId i : pending) {
    for (VertexId j : graph_->neighbors(i)) {
      if (j > i && marker[j]) record_triangle(u, i, j);
    }
  }
  for (VertexId i : pending) marker[i] = 0;
  return finish(u);
}

double EgoWorkspace::compute_in_order(const OrderedGraph& og, VertexId u) {
  if (processed_[u]) return score_from_map(maps_[u], *graph_);
  auto& marker = scratch_.marker;
  auto out = og.out_neighbors(u);
  for (VertexId v : out) marker[v] = 1;
  for (VertexId v : out) {
    for (VertexId w : og.out_neighbors(v)) {
      if (marker[w]) record_triangle(u, v, w);
    }
  }
  for (VertexId v : out) marker[v] = 0;
  return finish(u);
}

double EgoWorkspace::bound(VertexId u) const {
  if (maps_[u].state() == MapState::kEmpty) return static_bound(graph_->degree(u));
  return dynamic_bound(maps_[u], *graph_);
}

void triangle_pass(const OrderedGraph& og, EgoWorkspace& ws) {
  for (VertexId u : og.order) ws.compute_in_order(og, u);
}

std::vector<double> compute_all_scores(const Graph& g) {
  auto og = orient(g);
  EgoWorkspace ws(g);
  triangle_pass(og, ws);
  std::vector<double> scores(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) scores[v] = score_from_map(ws.map(v), g);
  return scores;
}

ConnectorMap build_complete_map(const Graph& g, VertexId p) {
  if (!g.is_valid(p)) throw GraphError("invalid vertex id");
  ConnectorMap s(p);
  s.set_state(MapState::kComplete);
  auto nbrs = g.neighbors(p);
  std::vector<VertexId> shared;
  for (VertexId w : nbrs) {
    shared.clear();
    auto wn = g.neighbors(w);
    std::set_intersection(nbrs.begin(), nbrs.end(), wn.begin(), wn.end(),
                          std::back_inserter(shared));
    for (std::size_t x = 0; x < shared.size(); ++x) {
      s.mark_adjacent(w, shared[x]);
      for (std::size_t y = x + 1; y < shared.size(); ++y) {
        if (!g.has_edge(shared[x], shared[y])) s.record_connector(shared[x], shared[y]);
      }
    }
  }
  return s;
}

double exact_score(const Graph& g, VertexId p) { return score_from_map(build_complete_map(g, p), g); }

}  // namespace egobw
