#include "egobw/topk.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "egobw/egoscore.hpp"

namespace egobw {

namespace {

// Strict total order used for every result decision: higher score first,
// then smaller original ID. It makes the top-k set unique, so the searches
// agree with each other and with the oracle even at ties.
struct Better {
  const Graph* g;
  bool operator()(const ScoredVertex& a, const ScoredVertex& b) const {
    if (a.score != b.score) return a.score > b.score;
    return g->original_id(a.vertex) < g->original_id(b.vertex);
  }
};

class ResultSet {
 public:
  ResultSet(const Graph& g, std::size_t k) : better_{&g}, k_(k) {}

  bool full() const { return members_.size() >= k_; }

  // Members are ordered worst first.
  const ScoredVertex& worst() const { return *members_.begin(); }

  // Could a vertex whose score is at most `bound` still displace the worst?
  bool can_enter(VertexId v, double bound) const {
    return !full() || better_(ScoredVertex{v, bound}, worst());
  }

  void offer(VertexId v, double score) {
    ScoredVertex candidate{v, score};
    if (!full()) {
      members_.insert(candidate);
    } else if (better_(candidate, worst())) {
      members_.erase(members_.begin());
      members_.insert(candidate);
    }
  }

  std::vector<ScoredVertex> sorted() const {
    std::vector<ScoredVertex> out(members_.rbegin(), members_.rend());
    return out;
  }

 private:
  struct WorstFirst {
    Better better;
    bool operator()(const ScoredVertex& a, const ScoredVertex& b) const { return better(b, a); }
  };
  Better better_;
  std::size_t k_;
  std::set<ScoredVertex, WorstFirst> members_{WorstFirst{better_}};
};

}  // namespace

TopKResult base_search(const Graph& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto og = orient(g);
  EgoWorkspace ws(g);
  ResultSet result(g, k);

  for (VertexId u : og.order) {
    const double bound = static_bound(g, u);
    if (result.full()) {
      // Later vertices have no larger static bound.
      if (result.worst().score > bound) break;
      if (!result.can_enter(u, bound)) continue;
    }
    result.offer(u, ws.compute(u));
  }
  return TopKResult{k, result.sorted(), ws.exact_computations()};
}

TopKResult opt_search(const Graph& g, std::size_t k, double theta, const BoundObserver& observer) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(theta >= 1.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("theta must be a finite value >= 1");
  }
  EgoWorkspace ws(g);
  ResultSet result(g, k);
  BoundQueue queue(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) queue.push(v, static_bound(g, v));

  while (!queue.empty()) {
    const auto [v, popped] = queue.pop();
    const double refreshed = ws.bound(v);
    if (observer) observer(v, refreshed);
    if (theta * refreshed < popped) {
      if (result.can_enter(v, refreshed)) queue.push(v, refreshed);
      continue;
    }
    if (result.full() && !result.can_enter(v, popped)) {
      // Every queued bound is <= popped.
      if (result.worst().score > popped) break;
      continue;
    }
    result.offer(v, ws.compute(v));
  }
  return TopKResult{k, result.sorted(), ws.exact_computations()};
}

std::vector<ScoredVertex> rank_all(const Graph& g, const std::vector<double>& scores) {
  std::vector<ScoredVertex> out;
  out.reserve(scores.size());
  for (VertexId v = 0; v < scores.size(); ++v) out.push_back({v, scores[v]});
  std::sort(out.begin(), out.end(), Better{&g});
  return out;
}

}  // namespace egobw
