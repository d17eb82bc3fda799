#include "egobw/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace egobw {

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng) < p) edges.emplace_back(a, b);
    }
  }
  return Graph::with_vertices(n, edges);
}

Graph power_law(std::size_t n, double average_degree, double exponent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = std::pow(static_cast<double>(i + 1), -1.0 / (exponent - 1.0));
  }
  const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
  const double scale = average_degree * static_cast<double>(n) / total;
  for (auto& w : weight) w *= scale;
  const double sum = average_degree * static_cast<double>(n);

  // Sample m endpoints proportionally to weight, pairing them up.
  std::discrete_distribution<std::size_t> pick(weight.begin(), weight.end());
  const auto target_edges = static_cast<std::size_t>(sum / 2.0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(target_edges);
  for (std::size_t e = 0; e < target_edges; ++e) {
    auto a = static_cast<VertexId>(pick(rng));
    auto b = static_cast<VertexId>(pick(rng));
    edges.emplace_back(a, b);
  }
  return Graph::with_vertices(n, edges);
}

}  // namespace egobw
