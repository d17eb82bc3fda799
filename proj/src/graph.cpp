#include "egobw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>

namespace egobw {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view next_token(std::string_view& s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  std::size_t end = 0;
  while (end < s.size() && !is_space(s[end])) ++end;
  auto token = s.substr(0, end);
  s.remove_prefix(end);
  return token;
}

OriginalId parse_id(std::string_view token, std::size_t line) {
  OriginalId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

VertexId Graph::intern(OriginalId id) {
  auto [it, inserted] = index_.try_emplace(id, static_cast<VertexId>(adjacency_.size()));
  if (inserted) {
    adjacency_.emplace_back();
    original_ids_.push_back(id);
  }
  return it->second;
}

bool Graph::insert_sorted(VertexId a, VertexId b) {
  auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b);
  if (it != list.end() && *it == b) return false;
  list.insert(it, b);
  return true;
}

Graph Graph::from_edges(std::span<const std::pair<OriginalId, OriginalId>> edges,
                        LoadStats* stats) {
  Graph g;
  LoadStats local;
  for (auto [a, b] : edges) {
    VertexId ia = g.intern(a);
    VertexId ib = g.intern(b);
    if (ia == ib) {
      ++local.self_loops;
      continue;
    }
    if (!g.insert_sorted(ia, ib)) {
      ++local.duplicates;
      continue;
    }
    g.insert_sorted(ib, ia);
    ++g.num_edges_;
  }
  if (stats) *stats = local;
  return g;
}

Graph Graph::with_vertices(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                           LoadStats* stats) {
  Graph g;
  g.adjacency_.resize(n);
  g.original_ids_.resize(n);
  std::iota(g.original_ids_.begin(), g.original_ids_.end(), OriginalId{0});
  for (std::size_t v = 0; v < n; ++v) g.index_.emplace(v, static_cast<VertexId>(v));
  LoadStats local;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw GraphError("edge endpoint out of range");
    if (a == b) {
      ++local.self_loops;
      continue;
    }
    if (!g.insert_sorted(a, b)) {
      ++local.duplicates;
      continue;
    }
    g.insert_sorted(b, a);
    ++g.num_edges_;
  }
  if (stats) *stats = local;
  return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!is_valid(a) || !is_valid(b)) return false;
  const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  VertexId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::optional<VertexId> Graph::find_vertex(OriginalId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::add_edge(VertexId a, VertexId b) {
  if (!is_valid(a) || !is_valid(b)) throw GraphError("invalid vertex id");
  if (a == b) throw GraphError("self-loops are not allowed");
  if (!insert_sorted(a, b)) throw GraphError("edge already present");
  insert_sorted(b, a);
  ++num_edges_;
}

void Graph::remove_edge(VertexId a, VertexId b) {
  if (!is_valid(a) || !is_valid(b)) throw GraphError("invalid vertex id");
  auto erase = [this](VertexId x, VertexId y) {
    auto& list = adjacency_[x];
    auto it = std::lower_bound(list.begin(), list.end(), y);
    if (it == list.end() || *it != y) return false;
    list.erase(it);
    return true;
  };
  if (!erase(a, b)) throw GraphError("edge not present");
  erase(b, a);
  --num_edges_;
}

std::vector<std::pair<OriginalId, OriginalId>> Graph::canonical_edges() const {
  std::vector<std::pair<OriginalId, OriginalId>> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(std::minmax(original_ids_[u], original_ids_[v]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph load_edge_list(std::istream& in, LoadStats* stats) {
  std::vector<std::pair<OriginalId, OriginalId>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (rest.empty() || rest.front() == '#') continue;
    auto first = next_token(rest);
    auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two vertex ids");
    if (!trim(rest).empty()) throw ParseError(line_no, "trailing tokens after edge");
    edges.emplace_back(parse_id(first, line_no), parse_id(second, line_no));
  }
  if (in.bad()) throw GraphError("read error");
  if (edges.empty()) throw GraphError("empty graph: no edges in input");
  return Graph::from_edges(edges, stats);
}

Graph load_edge_list_file(const std::string& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return load_edge_list(in, stats);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [a, b] : g.canonical_edges()) out << a << ' ' << b << '\n';
}

OrderedGraph orient(const Graph& g) {
  const std::size_t n = g.num_vertices();
  OrderedGraph og;
  og.graph = &g;
  og.order.resize(n);
  std::iota(og.order.begin(), og.order.end(), VertexId{0});
  std::sort(og.order.begin(), og.order.end(), [&g](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return g.original_id(a) > g.original_id(b);
  });
  og.rank.resize(n);
  for (std::size_t i = 0; i < n; ++i) og.rank[og.order[i]] = static_cast<VertexId>(i);
  og.out_adjacency.resize(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (og.rank[u] < og.rank[v]) og.out_adjacency[u].push_back(v);
    }
  }
  return og;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  if (!g.is_valid(u) || !g.is_valid(v)) throw GraphError("invalid vertex id");
  if (u == v) throw GraphError("common_neighbors requires distinct vertices");
  std::vector<VertexId> out;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace egobw
