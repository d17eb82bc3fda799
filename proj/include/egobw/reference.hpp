#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "egobw/graph.hpp"

namespace egobw::reference {

__extension__ typedef __int128 Int128;

/// Exact rational with 128-bit numerator and denominator, always reduced
/// and with a positive denominator. Overflow throws std::overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(Int128 num, Int128 den = 1);

  Int128 num() const noexcept { return num_; }
  Int128 den() const noexcept { return den_; }
  double to_double() const;
  std::string to_string() const;

  Rational& operator+=(const Rational& other);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  Int128 num_ = 0;
  Int128 den_ = 1;
};

/// Induced subgraph on N(p) ∪ {p}. Members are local indices 0..size-1 with
/// the center at index 0.
struct EgoNetwork {
  VertexId center = 0;
  std::vector<VertexId> members;
  std::vector<std::vector<std::size_t>> adjacency;
};

EgoNetwork build_ego_network(const Graph& g, VertexId p);

struct EgoOracle {
  /// Sum over non-adjacent neighbor pairs of 1 / (connectors + 1).
  Rational by_formula;
  /// Sum over neighbor pairs of g_uv(p) / g_uv from breadth-first
  /// shortest-path counting inside the ego network.
  Rational by_path_counting;
  double value() const { return by_formula.to_double(); }
};

EgoOracle brute_force_cb(const Graph& g, VertexId p);

/// Brandes' algorithm for unweighted undirected graphs; each unordered pair
/// is counted once.
std::vector<double> brandes_betweenness(const Graph& g);

/// |top_k(a) ∩ top_k(b)| / k over per-vertex scores, choosing among ties at
/// the k-th score so as to maximize the overlap. Scores within `tie_eps` are
/// treated as equal. Throws std::invalid_argument if k is 0 or exceeds the
/// number of vertices, or if the rankings differ in size.
double topk_overlap(const std::vector<double>& a, const std::vector<double>& b, std::size_t k,
                    double tie_eps = 1e-9);

}  // namespace egobw::reference
