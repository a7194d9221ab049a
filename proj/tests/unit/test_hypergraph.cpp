#include <doctest.h>

#include "hgemb/errors.hpp"
#include "hgemb/families.hpp"
#include "hgemb/hypergraph.hpp"
#include "oracles.hpp"

using namespace hgemb;

TEST_CASE("connectivity agrees with breadth-first search on every subset") {
  const auto graphs = oracle::corpus(4, 4);
  REQUIRE(graphs.size() > 100);
  for (const auto& h : graphs) {
    for (std::uint32_t m = 1; m < (1u << h.num_vertices()); ++m) {
      CHECK(is_connected(h, VertexSet(m)) == oracle::bfs_connected(h, VertexSet(m)));
    }
    CHECK(connected_subsets(h).size() == oracle::connected_sets(h).size());
  }
}

TEST_CASE("connected subsets come in cardinality-then-mask order") {
  const Hypergraph h = families::cycle(5);
  const auto sets = connected_subsets(h);
  auto expected = oracle::connected_sets(h);
  std::sort(expected.begin(), expected.end(), [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
  CHECK(sets == expected);
  // 5 singletons, 5 paths of each length 2..4, and the whole cycle.
  CHECK(sets.size() == 21);
}

TEST_CASE("touch means shared vertex or a common hyperedge") {
  const Hypergraph h = families::pyramid();  // x1 x2 x3 y
  CHECK(touches(h, VertexSet{0}, VertexSet{3}));
  CHECK(touches(h, VertexSet{0}, VertexSet{1}));
  const Hypergraph c = families::cycle(6);
  CHECK_FALSE(touches(c, VertexSet{0}, VertexSet{3}));
  CHECK(touches(c, VertexSet{0, 1}, VertexSet{2}));
  for (std::uint32_t a = 1; a < 64; ++a) {
    for (std::uint32_t b = 1; b < 64; ++b) {
      CHECK(touches(c, VertexSet(a), VertexSet(b)) == oracle::touch(c, VertexSet(a), VertexSet(b)));
    }
  }
}

TEST_CASE("text format round-trips and rejects bad input") {
  const Hypergraph h = families::hyper_boat();
  const Hypergraph back = parse_hypergraph(format_hypergraph(h));
  CHECK(back == h);
  CHECK(back.labels() == h.labels());

  CHECK_THROWS_AS(parse_hypergraph("edge: a b\n"), InputError);
  CHECK_THROWS_AS(parse_hypergraph("vertices: a b\nedge: a c\n"), InputError);
  CHECK_THROWS_AS(parse_hypergraph("vertices: a b\nedge: a b\nedge: b a\n"), InputError);
  CHECK_THROWS_AS(parse_hypergraph("vertices: a b c\nedge: a b\n"), InputError);  // c uncovered
  CHECK_THROWS_AS(parse_hypergraph("vertices: a a\nedge: a\n"), InputError);
  CHECK_NOTHROW(parse_hypergraph("# comment\nvertices: a b\n\nedge: a b  # trailing\n"));
}

TEST_CASE("components, restriction and the clique graph") {
  const Hypergraph h = parse_hypergraph("vertices: a b c d e\nedge: a b c\nedge: d e\n");
  const auto comps = connected_components(h);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4});
  const Hypergraph right = restrict_to(h, comps[1]);
  CHECK(right.num_vertices() == 2);
  CHECK(right.label(0) == "d");
  const Hypergraph g = clique_graph(h);
  CHECK(g.is_graph());
  CHECK(g.num_edges() == 4);
  CHECK_FALSE(h.is_graph());
  CHECK(h.edge_closure(VertexSet{0}) == VertexSet{0, 1, 2});
}

TEST_CASE("family generators have the documented shape") {
  CHECK(families::cycle(7).num_edges() == 7);
  CHECK(families::complete_bipartite(2, 3).num_edges() == 6);
  CHECK(families::hyperclique(5, 3).num_edges() == 10);
  const Hypergraph a = families::almost_clique(5, 2);
  CHECK(a.num_edges() == 2 + 6);
  CHECK(families::boat().num_vertices() == 8);
  CHECK(families::boat().num_edges() == 9);
  CHECK(families::hyper_boat().num_edges() == 5);
  CHECK_THROWS_AS(families::by_name("nope", {}), InputError);
  const int bad[] = {2};
  CHECK_THROWS_AS(families::by_name("cycle", bad), InputError);
}
