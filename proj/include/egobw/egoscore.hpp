#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "egobw/connector_map.hpp"
#include "egobw/graph.hpp"

namespace egobw {

/// d(d-1)/2: the number of neighbor pairs, an upper bound on the score.
double static_bound(std::size_t degree);
double static_bound(const Graph& g, VertexId u);

/// Bound from whatever the map has identified so far:
///   d(d-1)/2 - #adjacent - #connector pairs + sum over connector pairs 1/(val+1).
/// Equals the exact score once the map is complete.
double dynamic_bound(const ConnectorMap& s, std::size_t degree);
double dynamic_bound(const ConnectorMap& s, const Graph& g);

/// Exact ego-betweenness from a complete map. Same arithmetic as
/// dynamic_bound; the fractional part is summed by connector count in
/// ascending order, so the result does not depend on how the map was built.
double score_from_map(const ConnectorMap& s, const Graph& g);

/// Reusable per-call buffers for EgoWorkspace::compute.
struct ComputeScratch {
  std::vector<char> marker;             // membership of pending neighbors
  std::vector<VertexId> done_neighbors;     // neighbors already scored exactly
  std::vector<VertexId> pending_neighbors;  // neighbors not yet scored
};

/// Connector maps of every vertex plus the bookkeeping needed to score
/// vertices one at a time in any order.
///
/// Scoring a vertex u enumerates the triangles (u, i, j) whose vertices are
/// all still unscored; every other triangle through u was found when its
/// first vertex was scored. Each edge remembers the apexes of the triangles
/// found on it. When a new apex z joins edge (x, y), every earlier apex w not
/// adjacent to z gives one diamond, counted once in the maps of x and of y
/// (each is a connector of (z, w) in the other's ego network). Hence a
/// diamond is counted exactly once, when its second triangle appears, and
/// the map of a scored vertex is complete.
class EgoWorkspace {
 public:
  explicit EgoWorkspace(const Graph& g);

  const Graph& graph() const noexcept { return *graph_; }
  const ConnectorMap& map(VertexId v) const { return maps_[v]; }
  std::span<const ConnectorMap> maps() const noexcept { return maps_; }
  bool is_processed(VertexId v) const { return processed_[v] != 0; }

  /// Scores u exactly, completing its map and propagating the connectors
  /// discovered on the way into its neighbors' maps. Calling it again on a
  /// processed vertex returns the stored result without new work.
  double compute(VertexId u);

  /// Scores u by walking out-neighbors of the orientation. Requires that
  /// exactly the vertices ranked before u have been processed.
  double compute_in_order(const OrderedGraph& og, VertexId u);

  /// Dynamic bound of u from its current (possibly partial) map; the static
  /// bound when nothing is known yet.
  double bound(VertexId u) const;

  /// Apexes of the triangles recorded so far on edge (a, b).
  std::span<const VertexId> partners(VertexId a, VertexId b) const;

  std::size_t triangles_found() const noexcept { return triangles_; }
  std::size_t exact_computations() const noexcept { return computations_; }

 private:
  std::size_t edge_slot(VertexId a, VertexId b) const;
  void record_triangle(VertexId a, VertexId b, VertexId c);
  void link_apex(VertexId x, VertexId y, VertexId apex);
  void touch(VertexId v);
  double finish(VertexId u);

  const Graph* graph_;
  std::vector<ConnectorMap> maps_;
  std::vector<char> processed_;
  std::vector<std::size_t> slot_offset_;
  std::vector<std::vector<VertexId>> partners_;
  ComputeScratch scratch_;
  std::size_t triangles_ = 0;
  std::size_t computations_ = 0;
};

/// Scores u exactly within the workspace (see EgoWorkspace::compute).
inline double ego_bw_cal(EgoWorkspace& ws, VertexId u) { return ws.compute(u); }

/// Processes every vertex in the total order, enumerating each triangle once
/// from its first vertex. Afterwards all maps are complete.
void triangle_pass(const OrderedGraph& og, EgoWorkspace& ws);

/// All scores via a full sequential triangle pass.
std::vector<double> compute_all_scores(const Graph& g);

/// Complete map of p built directly from the graph, independent of any
/// workspace: for every neighbor w, the common neighbors of p and w are
/// adjacent to w in p's ego network and every non-adjacent pair among them
/// has w as a connector.
ConnectorMap build_complete_map(const Graph& g, VertexId p);

/// score_from_map(build_complete_map(g, p), g).
double exact_score(const Graph& g, VertexId p);

}  // namespace egobw
