#include "egobw/connector_map.hpp"

#include <algorithm>

namespace egobw {

void ConnectorMap::bump_histogram(std::uint32_t from, std::uint32_t to) {
  if (histogram_.size() <= to) histogram_.resize(to + 1, 0);
  if (from > 0) --histogram_[from];
  ++histogram_[to];
}

bool ConnectorMap::mark_adjacent(VertexId a, VertexId b) {
  auto [it, inserted] = entries_.try_emplace(pack(a, b), 0u);
  if (inserted) {
    ++adjacent_;
    return true;
  }
  if (it->second != 0) {
    throw ConnectorMapError("pair recorded with connectors cannot become adjacent");
  }
  return false;
}

void ConnectorMap::record_connector(VertexId a, VertexId b) {
  auto [it, inserted] = entries_.try_emplace(pack(a, b), 1u);
  if (inserted) {
    bump_histogram(0, 1);
    return;
  }
  if (it->second == 0) return;
  bump_histogram(it->second, it->second + 1);
  ++it->second;
}

std::optional<std::uint32_t> ConnectorMap::find(VertexId a, VertexId b) const {
  auto it = entries_.find(pack(a, b));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ConnectorMap::connectors(VertexId a, VertexId b) const {
  auto it = entries_.find(pack(a, b));
  return it == entries_.end() ? 0u : it->second;
}

std::vector<ConnectorEntry> ConnectorMap::sorted_entries() const {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> raw(entries_.begin(), entries_.end());
  std::sort(raw.begin(), raw.end());
  std::vector<ConnectorEntry> out;
  out.reserve(raw.size());
  for (auto [key, val] : raw) {
    auto [a, b] = unpack(key);
    out.push_back({a, b, val});
  }
  return out;
}

bool ConnectorMap::same_contents(const ConnectorMap& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (const auto& [key, val] : entries_) {
    auto it = other.entries_.find(key);
    if (it == other.entries_.end() || it->second != val) return false;
  }
  return true;
}

}  // namespace egobw
