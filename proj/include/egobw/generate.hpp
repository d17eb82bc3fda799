#pragma once

#include <cstdint>

#include "egobw/graph.hpp"

namespace egobw {

/// G(n, p) random graph; vertex i has original ID i.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Chung-Lu graph with power-law expected degrees (exponent > 2) scaled to
/// the requested average degree. Heavy-tailed, so oriented out-degrees are
/// skewed.
Graph power_law(std::size_t n, double average_degree, double exponent, std::uint64_t seed);

}  // namespace egobw
