#pragma once

#include <cstddef>
#include <vector>

#include "egobw/graph.hpp"

namespace egobw {

struct ParallelStats {
  /// Triangles enumerated during accumulation; each triangle is found once.
  std::size_t triangles = 0;
};

/// Computes every score in three phases separated by barriers:
///   1. triangle enumeration, one work unit per vertex of the orientation
///      (dynamic chunks of 64 vertices);
///   2. connector accumulation into shared maps under per-owner locks, with
///      each worker batching its updates per owner;
///   3. scoring, one vertex per task, read-only over the maps.
/// The result is bit-identical to compute_all_scores for any thread count.
std::vector<double> vertex_pebw(const OrderedGraph& og, unsigned threads,
                                ParallelStats* stats = nullptr);

/// Same contract as vertex_pebw, but phases 1 and 2 distribute directed
/// edges of the orientation (dynamic chunks of 1024), which balances work
/// when out-degrees are skewed.
std::vector<double> edge_pebw(const OrderedGraph& og, unsigned threads,
                              ParallelStats* stats = nullptr);

}  // namespace egobw
