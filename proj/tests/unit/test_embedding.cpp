#include <doctest.h>

#include <random>

#include "hgemb/embedding.hpp"
#include "hgemb/errors.hpp"
#include "hgemb/families.hpp"
#include "oracles.hpp"

using namespace hgemb;

TEST_CASE("all-of-vertices embedding is valid with wed k") {
  for (const auto& h : {families::cycle(5), families::pyramid(), families::hyper_boat()}) {
    for (int k = 1; k <= 6; ++k) {
      const auto r = is_valid_embedding(h, families::all_of_vertices(h, k));
      CHECK(r.valid);
      CHECK(r.wed == k);
    }
  }
}

TEST_CASE("pyramid five-clique embedding") {
  const Hypergraph h = families::pyramid();
  const Embedding e = parse_embedding(h, "k: 5\nmap 1: x1\nmap 2: x2\nmap 3: x3\nmap 4: y\nmap 5: y\n");
  const auto r = is_valid_embedding(h, e);
  CHECK(r.valid);
  CHECK(r.wed == 3);
  CHECK(r.vertex_depths == std::vector<int>{1, 1, 1, 2});
  // edges: {x1 x2 x3}, {x1 y}, {x2 y}, {x3 y}
  CHECK(r.edge_weak_depths == std::vector<int>{3, 3, 3, 3});
  CHECK(r.edge_depths == std::vector<int>{3, 3, 3, 3});
  CHECK(r.ed == 3);
  CHECK(min_wed_ilp(h, 5).wed == 3);
}

TEST_CASE("invalid embeddings are reported, malformed ones rejected") {
  const Hypergraph c6 = families::cycle(6);
  Embedding apart{2, {VertexSet{0}, VertexSet{3}}};
  auto r = is_valid_embedding(c6, apart);
  CHECK_FALSE(r.valid);
  CHECK(r.violations.size() == 1);
  Embedding split{1, {VertexSet{0, 3}}};
  CHECK_FALSE(is_valid_embedding(c6, split).valid);
  CHECK_THROWS_AS(is_valid_embedding(c6, Embedding{2, {VertexSet{0}}}), InputError);
  CHECK_THROWS_AS(is_valid_embedding(c6, Embedding{1, {VertexSet{}}}), InputError);
  CHECK_THROWS_AS(parse_embedding(c6, "k: 2\nmap 1: x1\n"), InputError);
  CHECK_THROWS_AS(parse_embedding(c6, "k: 1\nmap 1: x9\n"), InputError);
  CHECK_THROWS_AS(parse_embedding(c6, "k: 1\nmap 2: x1\n"), InputError);
  CHECK_THROWS_AS(min_wed_ilp(c6, 0), InputError);
}

TEST_CASE("embedding text round-trips") {
  const auto w = families::witness("hyper_boat", {});
  const Embedding back = parse_embedding(w.h, format_embedding(w.h, w.e));
  CHECK(back.k == w.e.k);
  CHECK(back.images == w.e.images);
}

TEST_CASE("frozen weak edge depths from an independent search") {
  // Values produced offline by exhaustive search over multisets of
  // connected subsets (see oracle::min_wed for the same procedure).
  const int c6[] = {1, 2, 2, 3, 3, 4, 5};
  const Hypergraph h = families::cycle(6);
  for (int k = 1; k <= 7; ++k) {
    CAPTURE(k);
    CHECK(min_wed_ilp(h, k).wed == c6[k - 1]);
    if (k <= 6) CHECK(min_wed_bruteforce(h, k).wed == c6[k - 1]);
    if (k <= 5) CHECK(oracle::min_wed(h, k) == c6[k - 1]);
  }
  CHECK(min_wed_ilp(families::cycle(3), 3).wed == 2);
  CHECK(min_wed_ilp(families::complete_bipartite(2, 2), 3).wed == 2);
  CHECK(min_wed_ilp(families::pyramid(), 5).wed == 3);
}

TEST_CASE("integer program, brute force and the test oracle agree") {
  const auto graphs = oracle::corpus(4, 4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& h = graphs[pick(rng)];
    for (int k = 1; k <= 4; ++k) {
      const auto ilp = min_wed_ilp(h, k);
      const auto bf = min_wed_bruteforce(h, k);
      CHECK(ilp.wed == bf.wed);
      CHECK(ilp.wed == oracle::min_wed(h, k));
      CHECK(is_valid_embedding(h, ilp.witness).valid);
      CHECK(weak_edge_depth(h, ilp.witness) == ilp.wed);
      CHECK(weak_edge_depth(h, bf.witness) == bf.wed);
    }
  }
}

TEST_CASE("brute force budget guard") {
  CHECK_THROWS_AS(min_wed_bruteforce(families::hyper_boat(), 8, BruteForceOptions{1000}), ResourceError);
}

TEST_CASE("family witnesses are valid and reach their stated depth") {
  struct Case {
    const char* name;
    std::vector<int> params;
  };
  const Case cases[] = {{"cycle", {3}},
                        {"cycle", {6}},
                        {"cycle", {7}},
                        {"complete_bipartite", {2, 3}},
                        {"complete_bipartite", {3, 3}},
                        {"almost_clique", {5, 2}},
                        {"hyperclique", {5, 3}},
                        {"boat", {}},
                        {"hyper_boat", {}},
                        {"pyramid", {}}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto w = families::witness(c.name, c.params);
    const auto r = is_valid_embedding(w.h, w.e);
    CHECK(r.valid);
    CHECK(r.wed == w.wed);
  }
  const auto boat = families::witness("boat", {});
  CHECK(boat.e.k == 17);
  CHECK(boat.wed == 9);
}

TEST_CASE("fractional program on small families") {
  CHECK(emb_fractional(families::path(4)).emb == 1);
  CHECK(emb_fractional(families::cycle(5)).emb == Rational(5, 3));
  CHECK(emb_fractional(families::cycle(6)).emb == Rational(5, 3));
  CHECK(emb_fractional(families::complete_bipartite(2, 3)).emb == Rational(5, 3));
  CHECK(emb_fractional(families::hyperclique(4, 3)).emb == Rational(4, 3));

  const auto w = emb_fractional(families::hyper_boat());
  CHECK(w.emb == Rational(7, 4));
  CHECK(w.K == 7);
  const Embedding e = embedding_from_weights(w);
  const auto r = is_valid_embedding(families::hyper_boat(), e);
  CHECK(r.valid);
  CHECK(e.k == 7);
  CHECK(r.wed == 4);
}

TEST_CASE("disconnected hypergraph takes its best component") {
  const Hypergraph h = parse_hypergraph(
      "vertices: a b c d e f g\n"
      "edge: a b\nedge: b c\n"
      "edge: d e\nedge: e f\nedge: f g\nedge: g d\n");
  const auto w = emb_fractional(h);
  CHECK(w.disconnected);
  CHECK(w.emb == Rational(3, 2));
  CHECK(w.component == VertexSet{3, 4, 5, 6});
  for (const auto& [s, x] : w.weights) CHECK(s.subset_of(w.component));
}

TEST_CASE("emb_k curve of the six-cycle") {
  const auto curve = emb_k_curve(families::cycle(6), 6);
  REQUIRE(curve.size() == 6);
  CHECK(curve[4].first == 5);
  CHECK(curve[4].second == Rational(5, 3));
  CHECK(curve[2].second == Rational(3, 2));
}
