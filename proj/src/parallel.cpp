#include "egobw/parallel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "egobw/connector_map.hpp"
#include "egobw/egoscore.hpp"

namespace egobw {

namespace {

constexpr std::size_t kVertexChunk = 64;
constexpr std::size_t kEdgeChunk = 1024;

using Triangle = std::array<VertexId, 3>;

// Runs body(worker, begin, end) over [0, total) in dynamically claimed
// chunks. Returns after every worker has finished (the phase barrier).
template <typename Body>
void parallel_chunks(std::size_t total, std::size_t chunk, unsigned threads, Body&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    while (true) {
      std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
      if (begin >= total) break;
      body(id, begin, std::min(total, begin + chunk));
    }
  };
  if (threads == 1) {
    worker(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(worker, id);
  worker(0);
}

// Directed edges of the orientation, indexed by out-adjacency position.
struct EdgeIndex {
  std::vector<std::size_t> offset;  // per source vertex

  explicit EdgeIndex(const OrderedGraph& og) : offset(og.out_adjacency.size() + 1, 0) {
    for (std::size_t u = 0; u < og.out_adjacency.size(); ++u) {
      offset[u + 1] = offset[u] + og.out_adjacency[u].size();
    }
  }
  std::size_t size() const { return offset.back(); }
  std::size_t id(const OrderedGraph& og, VertexId from, VertexId to) const {
    auto out = og.out_neighbors(from);
    return offset[from] + static_cast<std::size_t>(std::lower_bound(out.begin(), out.end(), to) - out.begin());
  }
  VertexId source(std::size_t e) const {
    return static_cast<VertexId>(std::upper_bound(offset.begin(), offset.end(), e) - offset.begin() - 1);
  }
};

// Per-edge triangle apexes in compressed form.
struct ApexLists {
  std::vector<std::size_t> offset;
  std::vector<VertexId> apex;

  std::span<const VertexId> of(std::size_t e) const {
    return {apex.data() + offset[e], offset[e + 1] - offset[e]};
  }
};

ApexLists collect_apexes(const OrderedGraph& og, const EdgeIndex& edges,
                         const std::vector<std::vector<Triangle>>& found) {
  ApexLists lists;
  lists.offset.assign(edges.size() + 1, 0);
  auto for_each_side = [&](const Triangle& t, auto&& fn) {
    // t = (a, b, c) with a -> b, a -> c, b -> c.
    fn(edges.id(og, t[0], t[1]), t[2]);
    fn(edges.id(og, t[0], t[2]), t[1]);
    fn(edges.id(og, t[1], t[2]), t[0]);
  };
  for (const auto& bucket : found) {
    for (const auto& t : bucket) for_each_side(t, [&](std::size_t e, VertexId) { ++lists.offset[e + 1]; });
  }
  for (std::size_t e = 0; e < edges.size(); ++e) lists.offset[e + 1] += lists.offset[e];
  lists.apex.resize(lists.offset.back());
  std::vector<std::size_t> fill(lists.offset.begin(), lists.offset.end() - 1);
  for (const auto& bucket : found) {
    for (const auto& t : bucket) {
      for_each_side(t, [&](std::size_t e, VertexId x) { lists.apex[fill[e]++] = x; });
    }
  }
  return lists;
}

// Buffered map mutations for one owner.
struct Pending {
  std::vector<std::uint64_t> adjacent;
  std::vector<std::uint64_t> connectors;

  bool empty() const { return adjacent.empty() && connectors.empty(); }
  void clear() {
    adjacent.clear();
    connectors.clear();
  }
};

class SharedMaps {
 public:
  explicit SharedMaps(std::size_t n) : locks_(n) {
    maps_.reserve(n);
    for (VertexId v = 0; v < n; ++v) maps_.emplace_back(v);
  }

  void apply(VertexId owner, const Pending& batch) {
    if (batch.empty()) return;
    std::lock_guard guard(locks_[owner]);
    auto& s = maps_[owner];
    for (auto key : batch.adjacent) {
      auto [a, b] = ConnectorMap::unpack(key);
      s.mark_adjacent(a, b);
    }
    for (auto key : batch.connectors) {
      auto [a, b] = ConnectorMap::unpack(key);
      s.record_connector(a, b);
    }
  }

  std::vector<ConnectorMap>& maps() { return maps_; }

 private:
  std::vector<ConnectorMap> maps_;
  std::vector<std::mutex> locks_;
};

// Map updates implied by the apexes of edge (x, y), for either endpoint as
// owner: the other endpoint is adjacent to each apex, and the endpoints are
// connectors of every non-adjacent apex pair.
void stage_edge(const Graph& g, VertexId other, std::span<const VertexId> apexes, Pending& out) {
  for (std::size_t i = 0; i < apexes.size(); ++i) {
    out.adjacent.push_back(ConnectorMap::pack(other, apexes[i]));
    for (std::size_t j = i + 1; j < apexes.size(); ++j) {
      if (!g.has_edge(apexes[i], apexes[j])) {
        out.connectors.push_back(ConnectorMap::pack(apexes[i], apexes[j]));
      }
    }
  }
}

std::vector<double> score_all(const Graph& g, std::vector<ConnectorMap>& maps, unsigned threads) {
  std::vector<double> scores(g.num_vertices(), 0.0);
  parallel_chunks(g.num_vertices(), 1, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      maps[v].set_state(MapState::kComplete);
      scores[v] = score_from_map(maps[v], g);
    }
  });
  return scores;
}

void check_threads(unsigned threads) {
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
}

}  // namespace

std::vector<double> vertex_pebw(const OrderedGraph& og, unsigned threads, ParallelStats* stats) {
  check_threads(threads);
  const Graph& g = *og.graph;
  const std::size_t n = g.num_vertices();
  const EdgeIndex edges(og);

  std::vector<std::vector<Triangle>> found(threads);
  std::vector<std::vector<char>> markers(threads, std::vector<char>(n, 0));
  parallel_chunks(n, kVertexChunk, threads, [&](unsigned id, std::size_t begin, std::size_t end) {
    auto& marker = markers[id];
    for (std::size_t i = begin; i < end; ++i) {
      auto u = static_cast<VertexId>(i);
      auto out = og.out_neighbors(u);
      for (VertexId v : out) marker[v] = 1;
      for (VertexId v : out) {
        for (VertexId w : og.out_neighbors(v)) {
          if (marker[w]) found[id].push_back({u, v, w});
        }
      }
      for (VertexId v : out) marker[v] = 0;
    }
  });
  const ApexLists apexes = collect_apexes(og, edges, found);

  SharedMaps shared(n);
  parallel_chunks(n, kVertexChunk, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    Pending own;
    Pending theirs;
    for (std::size_t i = begin; i < end; ++i) {
      auto u = static_cast<VertexId>(i);
      own.clear();
      for (VertexId w : og.out_neighbors(u)) {
        auto list = apexes.of(edges.id(og, u, w));
        stage_edge(g, w, list, own);
        theirs.clear();
        stage_edge(g, u, list, theirs);
        shared.apply(w, theirs);
      }
      // All of u's out-edges land in one locked batch.
      shared.apply(u, own);
    }
  });

  if (stats) {
    stats->triangles = 0;
    for (const auto& bucket : found) stats->triangles += bucket.size();
  }
  return score_all(g, shared.maps(), threads);
}

std::vector<double> edge_pebw(const OrderedGraph& og, unsigned threads, ParallelStats* stats) {
  check_threads(threads);
  const Graph& g = *og.graph;
  const std::size_t n = g.num_vertices();
  const EdgeIndex edges(og);

  std::vector<std::vector<Triangle>> found(threads);
  parallel_chunks(edges.size(), kEdgeChunk, threads, [&](unsigned id, std::size_t begin, std::size_t end) {
    std::vector<VertexId> common;
    VertexId u = edges.source(begin);
    for (std::size_t e = begin; e < end; ++e) {
      while (edges.offset[u + 1] <= e) ++u;
      VertexId v = og.out_adjacency[u][e - edges.offset[u]];
      auto a = og.out_neighbors(u);
      auto b = og.out_neighbors(v);
      common.clear();
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      for (VertexId w : common) found[id].push_back({u, v, w});
    }
  });
  const ApexLists apexes = collect_apexes(og, edges, found);

  SharedMaps shared(n);
  parallel_chunks(edges.size(), kEdgeChunk, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    Pending batch;
    VertexId u = edges.source(begin);
    for (std::size_t e = begin; e < end; ++e) {
      while (edges.offset[u + 1] <= e) ++u;
      VertexId w = og.out_adjacency[u][e - edges.offset[u]];
      auto list = apexes.of(e);
      batch.clear();
      stage_edge(g, w, list, batch);
      shared.apply(u, batch);
      batch.clear();
      stage_edge(g, u, list, batch);
      shared.apply(w, batch);
    }
  });

  if (stats) {
    stats->triangles = 0;
    for (const auto& bucket : found) stats->triangles += bucket.size();
  }
  return score_all(g, shared.maps(), threads);
}

}  // namespace egobw
