#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "egobw/generate.hpp"
#include "egobw/graph.hpp"
#include "fixtures.hpp"

using namespace egobw;

TEST_CASE("load_edge_list builds a simple graph") {
  std::istringstream in("0 1\n1 2\n");
  Graph g = load_edge_list(in);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("self-loops and duplicates are dropped and counted") {
  std::istringstream in("0 0\n0 1\n0 1\n1 0\n");
  LoadStats stats;
  Graph g = load_edge_list(in, &stats);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(stats.self_loops == 1);
  CHECK(stats.duplicates == 2);
}

TEST_CASE("comments, blank lines and sparse ids") {
  std::istringstream in("# header\n\n  900 17 \n\t17\t4000000000\n");
  Graph g = load_edge_list(in);
  CHECK(g.num_vertices() == 3);
  CHECK(g.original_id(0) == 900);
  CHECK(g.original_id(2) == 4000000000ull);
  CHECK(g.find_vertex(17) == VertexId{1});
  CHECK_FALSE(g.find_vertex(5).has_value());
}

TEST_CASE("malformed input reports the line") {
  auto line_of = [](const char* text) {
    std::istringstream in(text);
    try {
      load_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 1\nx 2\n") == 2);
  CHECK(line_of("0 1\n1\n") == 2);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK(line_of("-1 2\n") == 1);

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(load_edge_list(empty), GraphError);
  CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.txt"), GraphError);
}

TEST_CASE("ego network of d has the expected shape and order") {
  Graph graph = fixtures::build(fixtures::ego_of_d());
  CHECK(graph.num_vertices() == 7);
  CHECK(graph.num_edges() == 13);
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) degree_sum += graph.degree(v);
  CHECK(degree_sum == 2 * graph.num_edges());

  OrderedGraph og = orient(graph);
  std::vector<OriginalId> order;
  for (VertexId v : og.order) order.push_back(graph.original_id(v));
  // Equal degrees break toward the larger ID.
  using namespace fixtures;
  CHECK(order == std::vector<OriginalId>{d, c, i, h, g, b, a});

  std::size_t out_total = 0;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    for (VertexId w : og.out_neighbors(v)) CHECK(og.precedes(v, w));
    out_total += og.out_neighbors(v).size();
  }
  CHECK(out_total == graph.num_edges());
}

TEST_CASE("orientation of symmetric and forced shapes") {
  Graph tri = fixtures::build({{0, 1}, {1, 2}, {2, 0}});
  OrderedGraph og = orient(tri);
  std::size_t directed = 0;
  for (VertexId v = 0; v < 3; ++v) directed += og.out_neighbors(v).size();
  CHECK(directed == 3);

  Graph star = fixtures::build(fixtures::star(3));
  OrderedGraph so = orient(star);
  CHECK(so.order.front() == fixtures::id(star, 0));
  CHECK(so.out_neighbors(fixtures::id(star, 0)).size() == 3);

  Graph r = erdos_renyi(40, 0.2, 3);
  CHECK(orient(r).order == orient(r).order);
}

TEST_CASE("common neighbors") {
  using namespace fixtures;
  Graph graph = build(ego_of_d());
  auto cn = common_neighbors(graph, id(graph, c), id(graph, i));
  std::vector<OriginalId> got;
  for (VertexId v : cn) got.push_back(graph.original_id(v));
  CHECK(got == std::vector<OriginalId>{d, g, h});
  CHECK(cn == common_neighbors(graph, id(graph, i), id(graph, c)));

  Graph p = build(path(3));
  CHECK(common_neighbors(p, 0, 2) == std::vector<VertexId>{1});

  Graph empty = Graph::with_vertices(4);
  CHECK(common_neighbors(empty, 0, 3).empty());
  CHECK_THROWS_AS(common_neighbors(empty, 0, 9), GraphError);
}

TEST_CASE("edge mutation") {
  Graph graph = Graph::with_vertices(3);
  graph.add_edge(0, 2);
  CHECK(graph.has_edge(2, 0));
  CHECK(graph.num_edges() == 1);
  CHECK_THROWS_AS(graph.add_edge(2, 0), GraphError);
  CHECK_THROWS_AS(graph.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(graph.add_edge(1, 7), GraphError);
  graph.remove_edge(0, 2);
  CHECK(graph.num_edges() == 0);
  CHECK_THROWS_AS(graph.remove_edge(0, 2), GraphError);
}

TEST_CASE("round trip through the canonical edge list") {
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph graph = power_law(300, 6.0, 2.5, seed);
    std::ostringstream out;
    write_edge_list(out, graph);
    std::istringstream in(out.str());
    Graph again = load_edge_list(in);
    CHECK(again.canonical_edges() == graph.canonical_edges());
    std::ostringstream out2;
    write_edge_list(out2, again);
    CHECK(out2.str() == out.str());
  }
  Graph fig = fixtures::build(fixtures::ego_of_d());
  std::ostringstream out;
  write_edge_list(out, fig);
  std::istringstream in(out.str());
  Graph again = load_edge_list(in);
  std::ostringstream out2;
  write_edge_list(out2, again);
  CHECK(out2.str() == out.str());
  std::istringstream in2(out2.str());
  CHECK(load_edge_list(in2) == again);
}

TEST_CASE("generators are seeded") {
  CHECK(erdos_renyi(50, 0.1, 9) == erdos_renyi(50, 0.1, 9));
  CHECK(erdos_renyi(50, 0.0, 9).num_edges() == 0);
  CHECK(erdos_renyi(20, 1.0, 9).num_edges() == 190);
  Graph pl = power_law(2000, 8.0, 2.5, 4);
  CHECK(pl.num_vertices() == 2000);
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < pl.num_vertices(); ++v) max_degree = std::max(max_degree, pl.degree(v));
  CHECK(max_degree > 40);
}
