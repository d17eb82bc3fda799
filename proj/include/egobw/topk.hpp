#pragma once

#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "egobw/graph.hpp"

namespace egobw {

constexpr double kDefaultTheta = 1.05;

struct ScoredVertex {
  VertexId vertex;
  double score;
  friend bool operator==(const ScoredVertex&, const ScoredVertex&) = default;
};

struct TopKResult {
  std::size_t k = 0;
  /// Score descending; equal scores by ascending original ID.
  std::vector<ScoredVertex> entries;
  std::size_t exact_computations = 0;
};

/// Called for every bound refresh of a popped vertex in opt_search.
using BoundObserver = std::function<void(VertexId, double refreshed_bound)>;

/// Max-priority queue of (vertex, bound). Equal bounds pop the smaller
/// original ID first. A vertex is re-pushed only after it was popped, so it
/// is never queued twice.
class BoundQueue {
 public:
  explicit BoundQueue(const Graph& g) : heap_(Compare{&g}) {}

  void push(VertexId v, double bound) { heap_.push({v, bound}); }
  ScoredVertex pop() {
    auto top = heap_.top();
    heap_.pop();
    return top;
  }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Compare {
    const Graph* g;
    bool operator()(const ScoredVertex& a, const ScoredVertex& b) const {
      if (a.score != b.score) return a.score < b.score;
      return g->original_id(a.vertex) > g->original_id(b.vertex);
    }
  };
  std::priority_queue<ScoredVertex, std::vector<ScoredVertex>, Compare> heap_;
};

/// Sweeps vertices in the total order (non-increasing static bound) and stops
/// once the k-th best exact score beats every remaining static bound.
TopKResult base_search(const Graph& g, std::size_t k);

/// Priority-driven search on dynamic bounds. A popped vertex whose refreshed
/// bound dropped by more than the factor theta is re-queued (or discarded if
/// it can no longer enter the result) instead of being scored.
TopKResult opt_search(const Graph& g, std::size_t k, double theta = kDefaultTheta,
                      const BoundObserver& observer = {});

/// Ranks all vertices by the given scores under the result ordering.
std::vector<ScoredVertex> rank_all(const Graph& g, const std::vector<double>& scores);

}  // namespace egobw
