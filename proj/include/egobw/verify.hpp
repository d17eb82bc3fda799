#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "egobw/graph.hpp"

namespace egobw::verify {

struct CorpusGraph {
  Graph graph;
  double p;
  std::uint64_t seed;
};

/// Seeded G(n, p) graphs with n uniform in [1, max_n] and p cycling through
/// 0.05, 0.2, 0.5. Same arguments, same corpus.
std::vector<CorpusGraph> random_corpus(std::size_t trials, std::size_t max_n, std::uint64_t seed);

struct EdgeUpdate {
  bool insert;
  VertexId u;
  VertexId v;
};

/// A uniformly chosen absent pair (insert) or present edge (delete), or
/// nullopt when there is none.
std::optional<EdgeUpdate> random_update(const Graph& g, bool insert, std::mt19937_64& rng);

struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void check(bool ok, const std::string& what);
};

struct VerifyOptions {
  std::size_t trials = 100;
  std::size_t max_n = 64;
  std::uint64_t seed = 42;
  std::size_t updates_per_graph = 10;
};

/// Runs the property suite, printing one line per property. Returns true
/// iff every property passed.
bool run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace egobw::verify
