#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include "egobw/connector_map.hpp"
#include "egobw/graph.hpp"
#include "egobw/topk.hpp"

namespace egobw {

/// Complete connector maps of the vertices whose scores an update of edge
/// (u, v) can change: u, v, and their common neighbors, in that order.
struct AffectedMaps {
  std::vector<VertexId> vertices;
  std::vector<ConnectorMap> maps;

  const ConnectorMap& of(VertexId v) const;
};

/// Rebuilds the maps of u, v and every common neighbor on `g`, which must
/// contain (u, v). Throws GraphError otherwise.
AffectedMaps local_upt_smap(const Graph& g, VertexId u, VertexId v);

struct ScoreChange {
  VertexId vertex;
  double before;
  double after;
};

/// Inserts (u, v) and updates `scores` in place for u, v and their common
/// neighbors; every other score is unaffected. Returns the updated entries
/// (u, v, then common neighbors in ID order).
std::vector<ScoreChange> local_insert(Graph& g, std::vector<double>& scores, VertexId u, VertexId v);

/// Deletes (u, v); mirror image of local_insert.
std::vector<ScoreChange> local_delete(Graph& g, std::vector<double>& scores, VertexId u, VertexId v);

/// Top-k maintenance that defers exact recomputation.
///
/// Each vertex keeps a stored score and a stale flag. Outside the result,
/// a stored score is always an upper bound on the true score (exact when not
/// stale); inside the result it is always a lower bound. Candidates outside
/// the result sit in a max-heap keyed by stored score; a stale entry is
/// recomputed only when it reaches the top with a key above the smallest
/// member's stored score. The smallest result member is recomputed before it
/// is trusted. A repair loop swaps the best outsider with the worst member
/// while the outsider scores strictly higher.
class LazyIndex {
 public:
  /// Scores every vertex once (in parallel when threads > 1).
  LazyIndex(Graph g, std::size_t k, unsigned threads = 1);

  /// Throws GraphError if the edge is already present.
  void insert_edge(VertexId u, VertexId v);
  /// Throws GraphError if the edge is absent.
  void remove_edge(VertexId u, VertexId v);

  /// Current top-k, score descending. Stale members are recomputed first.
  std::vector<ScoredVertex> results();

  const Graph& graph() const noexcept { return graph_; }
  std::size_t k() const noexcept { return k_; }
  bool in_result(VertexId v) const { return in_result_[v] != 0; }
  bool is_stale(VertexId v) const { return stale_[v] != 0; }
  double stored_score(VertexId v) const { return score_[v]; }
  /// Exact score computations performed since construction.
  std::size_t recomputations() const noexcept { return recomputations_; }

 private:
  struct Candidate {
    double key;
    OriginalId original;
    VertexId vertex;
    std::uint32_t version;
  };
  struct CandidateOrder {
    bool operator()(const Candidate& a, const Candidate& b) const {
      if (a.key != b.key) return a.key < b.key;
      return a.original > b.original;
    }
  };
  using MemberKey = std::tuple<double, std::uint64_t, VertexId>;

  MemberKey member_key(VertexId v) const;
  void recompute(VertexId v);
  void set_outside(VertexId v, double key, bool stale);
  double stored_min() const;
  void refresh_gated(VertexId v);
  VertexId resolve_worst_member();
  std::optional<Candidate> peek_outside();
  void repair();

  Graph graph_;
  std::size_t k_;
  std::vector<double> score_;
  std::vector<char> stale_;
  std::vector<char> in_result_;
  std::vector<std::uint32_t> version_;
  std::set<MemberKey> members_;  // worst first
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> outside_;
  std::size_t recomputations_ = 0;
};

/// One line of an update stream: "+ u v" inserts, "- u v" deletes.
struct UpdateOp {
  enum class Kind { kInsert, kDelete };
  Kind kind;
  OriginalId u;
  OriginalId v;
  std::size_t line;
};

/// Parses an update stream ('#' comments and blank lines ignored). Throws
/// ParseError on malformed lines.
std::vector<UpdateOp> parse_update_stream(std::istream& in);

}  // namespace egobw
