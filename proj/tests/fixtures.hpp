#pragma once

#include <utility>
#include <vector>

#include "egobw/graph.hpp"

namespace fixtures {

using Edges = std::vector<std::pair<egobw::OriginalId, egobw::OriginalId>>;

// Letters map to IDs by alphabet position: a=0, b=1, c=2, d=3, e=4, f=5,
// g=6, h=7, i=8, j=9, k=10.
enum : egobw::OriginalId { a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6, h = 7, i = 8, j = 9, k = 10 };

// The ego network of d from the running example.
inline Edges ego_of_d() {
  return {{d, a}, {d, b}, {d, c}, {d, g}, {d, h}, {d, i}, {a, b},
          {a, c}, {b, c}, {c, g}, {c, h}, {g, i}, {h, i}};
}

// Four vertices around the edge (i, k) before it is inserted.
inline Edges insert_ik() { return {{k, f}, {k, j}, {i, f}, {i, j}}; }

// Neighborhood of g in which deleting (c, g) takes C_B(g) from 2/3 to 1/2.
inline Edges delete_cg() {
  return {{g, c}, {g, d}, {g, e}, {g, i}, {c, d}, {c, e}, {i, d}, {i, e}};
}

inline Edges path(egobw::OriginalId n) {
  Edges out;
  for (egobw::OriginalId v = 0; v + 1 < n; ++v) out.emplace_back(v, v + 1);
  return out;
}

inline Edges star(egobw::OriginalId leaves) {
  Edges out;
  for (egobw::OriginalId v = 1; v <= leaves; ++v) out.emplace_back(0, v);
  return out;
}

inline Edges cycle(egobw::OriginalId n) {
  Edges out = path(n);
  out.emplace_back(n - 1, 0);
  return out;
}

inline Edges complete(egobw::OriginalId n) {
  Edges out;
  for (egobw::OriginalId u = 0; u < n; ++u) {
    for (egobw::OriginalId v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

inline egobw::Graph build(const Edges& edges) { return egobw::Graph::from_edges(edges); }

inline egobw::VertexId id(const egobw::Graph& graph, egobw::OriginalId original) {
  return *graph.find_vertex(original);
}

}  // namespace fixtures
