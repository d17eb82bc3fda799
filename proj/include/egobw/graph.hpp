#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace egobw {

/// Dense internal vertex identifier in [0, n).
using VertexId = std::uint32_t;
/// Identifier as it appears in the input edge list.
using OriginalId = std::uint64_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Counters for input records dropped while building a simple graph.
struct LoadStats {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

/// Undirected simple graph with sorted adjacency lists.
///
/// Internal IDs are assigned in order of first appearance of the original
/// IDs. Adjacency lists are strictly increasing by internal ID, so membership
/// tests are binary searches. The graph may be mutated edge by edge (the
/// vertex set is fixed at construction).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from original-ID edges. Self-loops and repeated edges
  /// are dropped and counted in `stats`.
  static Graph from_edges(std::span<const std::pair<OriginalId, OriginalId>> edges,
                          LoadStats* stats = nullptr);

  /// Graph on vertices with original IDs 0..n-1 (internal ID == original ID)
  /// and the given internal-ID edges. Isolated vertices are allowed.
  static Graph with_vertices(std::size_t n,
                             std::span<const std::pair<VertexId, VertexId>> edges = {},
                             LoadStats* stats = nullptr);

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool is_valid(VertexId v) const noexcept { return v < adjacency_.size(); }
  bool has_edge(VertexId a, VertexId b) const;

  OriginalId original_id(VertexId v) const { return original_ids_[v]; }
  std::optional<VertexId> find_vertex(OriginalId id) const;

  /// Throws GraphError on self-loops, invalid IDs, or an already present edge.
  void add_edge(VertexId a, VertexId b);
  /// Throws GraphError when the edge is absent.
  void remove_edge(VertexId a, VertexId b);

  /// Edges as (min original, max original), sorted lexicographically.
  std::vector<std::pair<OriginalId, OriginalId>> canonical_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexId intern(OriginalId id);
  bool insert_sorted(VertexId a, VertexId b);

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<OriginalId> original_ids_;
  std::unordered_map<OriginalId, VertexId> index_;
  std::size_t num_edges_ = 0;
};

/// Total order over vertices (higher degree first, then larger original ID)
/// and the edge orientation it induces: every edge points from the earlier
/// vertex to the later one.
struct OrderedGraph {
  const Graph* graph = nullptr;
  /// rank[v] = position of v in the order.
  std::vector<VertexId> rank;
  /// order[i] = vertex at position i.
  std::vector<VertexId> order;
  /// Out-neighbors of each vertex, sorted by internal ID.
  std::vector<std::vector<VertexId>> out_adjacency;

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_adjacency[v]; }
  bool precedes(VertexId a, VertexId b) const { return rank[a] < rank[b]; }
};

/// Reads the whitespace-separated edge-list format: two non-negative integers
/// per line, '#' comment lines and blank lines ignored.
Graph load_edge_list(std::istream& in, LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path, LoadStats* stats = nullptr);

/// Writes `canonical_edges()` one per line, LF terminated.
void write_edge_list(std::ostream& out, const Graph& g);

OrderedGraph orient(const Graph& g);

/// Sorted common neighbors of u and v; (u,v) need not be an edge.
std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

}  // namespace egobw
