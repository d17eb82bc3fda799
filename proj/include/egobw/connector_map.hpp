#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "egobw/graph.hpp"

namespace egobw {

enum class MapState : std::uint8_t { kEmpty, kPartial, kComplete };

/// Raised when an update would contradict what a map already records, e.g.
/// marking a pair adjacent after connectors were counted for it.
class ConnectorMapError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ConnectorEntry {
  VertexId a;
  VertexId b;
  std::uint32_t val;
  friend bool operator==(const ConnectorEntry&, const ConnectorEntry&) = default;
};

/// Per-vertex record of neighbor pairs (i, j) of the owner p.
///
/// val == 0 means i and j are adjacent. val == c > 0 means i and j are not
/// adjacent and c connectors other than p are known. An absent pair has no
/// known connector besides p. Pairs are keyed by the packed (min, max)
/// internal IDs.
///
/// Alongside the entries, the map keeps the number of adjacent pairs and a
/// histogram of positive values, so both bounds and exact scores are
/// evaluated without walking the entries and independently of insertion
/// order.
class ConnectorMap {
 public:
  explicit ConnectorMap(VertexId owner = 0) : owner_(owner) {}

  static std::uint64_t pack(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  static std::pair<VertexId, VertexId> unpack(std::uint64_t key) {
    return {static_cast<VertexId>(key >> 32), static_cast<VertexId>(key & 0xffffffffu)};
  }

  VertexId owner() const noexcept { return owner_; }
  MapState state() const noexcept { return state_; }
  void set_state(MapState s) noexcept { state_ = s; }

  /// Records (a, b) as adjacent. Returns false when already recorded.
  /// Throws ConnectorMapError if connectors were already counted for the pair.
  bool mark_adjacent(VertexId a, VertexId b);

  /// Counts one more connector for the non-adjacent pair (a, b). A pair
  /// already recorded as adjacent is left untouched.
  void record_connector(VertexId a, VertexId b);

  std::optional<std::uint32_t> find(VertexId a, VertexId b) const;
  /// Known connectors of a non-adjacent pair (0 when absent or adjacent).
  std::uint32_t connectors(VertexId a, VertexId b) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t adjacent_pairs() const noexcept { return adjacent_; }
  std::size_t connector_pairs() const noexcept { return entries_.size() - adjacent_; }
  /// histogram()[c] = number of pairs with val == c, for c >= 1.
  const std::vector<std::size_t>& histogram() const noexcept { return histogram_; }

  /// Entries sorted by packed key.
  std::vector<ConnectorEntry> sorted_entries() const;

  /// Same pairs with the same values (state is not compared).
  bool same_contents(const ConnectorMap& other) const;

 private:
  void bump_histogram(std::uint32_t from, std::uint32_t to);

  VertexId owner_;
  MapState state_ = MapState::kEmpty;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> entries_;
  std::vector<std::size_t> histogram_;
  std::size_t adjacent_ = 0;
};

}  // namespace egobw
