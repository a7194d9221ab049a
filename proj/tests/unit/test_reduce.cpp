#include <doctest.h>

#include <bit>
#include <random>

#include "hgemb/errors.hpp"
#include "hgemb/families.hpp"
#include "hgemb/reduce.hpp"
#include "oracles.hpp"

using namespace hgemb;
using namespace hgemb::engine;
using namespace hgemb::reduce;

namespace {

WeightedGraph random_graph(std::mt19937& rng, int n, double p, const Semiring& s) {
  WeightedGraph g;
  g.n = n;
  std::uniform_real_distribution<double> coin(0, 1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) >= p) continue;
      Value w = s.one();
      if (s.name() == "tropical") w = static_cast<Value>(rng() % 9) - 2;
      if (s.name() == "counting" || s.name() == "max_times") w = 1 + static_cast<Value>(rng() % 3);
      g.set(u, v, w);
    }
  }
  return g;
}

int count_kcliques(const WeightedGraph& g, int k) {
  int total = 0;
  for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
    if (std::popcount(m) != k) continue;
    const auto vs = VertexSet(m).members();
    bool clique = true;
    for (std::size_t a = 0; a < vs.size() && clique; ++a) {
      for (std::size_t b = a + 1; b < vs.size() && clique; ++b) clique = g.find(vs[a], vs[b]) != nullptr;
    }
    total += clique ? 1 : 0;
  }
  return total;
}

}  // namespace

TEST_CASE("full lift repeats each clique k! times") {
  WeightedGraph tri;
  tri.n = 3;
  tri.set(0, 1, 1);
  tri.set(1, 2, 1);
  tri.set(0, 2, 1);
  const auto full = kpartite_lift(tri, 3);
  CHECK(full.graph.n == 9);
  CHECK(full.graph.weights.size() == 3 * 6);
  CHECK(kclique_direct(full.graph, 3, counting()) == 6);
  const auto canon = kpartite_lift(tri, 3, LiftMode::canonical);
  CHECK(kclique_direct(canon.graph, 3, counting()) == 1);
  // Copies of the same original vertex are never adjacent.
  for (int j = 0; j < 3; ++j) {
    for (int q = 0; q < 3; ++q) CHECK(full.graph.find(full.vertex(0, j), full.vertex(0, q)) == nullptr);
  }

  WeightedGraph empty;
  empty.n = 4;
  CHECK(kpartite_lift(empty, 3).graph.weights.empty());
  CHECK_THROWS_AS(kpartite_lift(tri, 1), InputError);
}

TEST_CASE("canonical lift has one k-clique per clique of g") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 3;
    const auto g = random_graph(rng, n, 0.6, counting());
    for (int k = 2; k <= 4; ++k) {
      const auto canon = kpartite_lift(g, k, LiftMode::canonical);
      WeightedGraph unit = canon.graph;
      for (auto& [uv, w] : unit.weights) w = 1;
      CHECK(kclique_direct(unit, k, counting()) == count_kcliques(g, k));
      CHECK(kclique_direct(canon.graph, k, counting()) == kclique_direct(g, k, counting()));
    }
  }
}

TEST_CASE("theta picks the lowest edge meeting both images") {
  const Hypergraph h = families::pyramid();  // edges: {x1 x2 x3}, {x1 y}, {x2 y}, {x3 y}
  const Embedding e = parse_embedding(h, "k: 5\nmap 1: x1\nmap 2: x2\nmap 3: x3\nmap 4: y\nmap 5: y\n");
  const auto theta = assign_theta(h, e);
  CHECK(theta.size() == 10);
  CHECK(theta.at({0, 1}) == 0);
  CHECK(theta.at({0, 3}) == 1);
  CHECK(theta.at({2, 4}) == 3);
  CHECK(theta.at({3, 4}) == 1);  // y and y: the first edge through y
  for (const auto& [pair, f] : theta) {
    CHECK(h.edge(f).intersects(e.images[static_cast<std::size_t>(pair.first)]));
    CHECK(h.edge(f).intersects(e.images[static_cast<std::size_t>(pair.second)]));
  }
  CHECK(assign_theta(h, Embedding{1, {VertexSet{0}}}).empty());

  const Hypergraph c6 = families::cycle(6);
  CHECK_THROWS_AS(assign_theta(c6, Embedding{2, {VertexSet{0}, VertexSet{3}}}), InputError);
}

TEST_CASE("reduced query equals the k-clique value") {
  std::mt19937 rng(19);
  const char* names[] = {"cycle", "cycle", "complete_bipartite", "pyramid", "hyper_boat"};
  const std::vector<int> params[] = {{4}, {6}, {2, 3}, {}, {}};
  for (int i = 0; i < 5; ++i) {
    const auto w = families::witness(names[i], params[i]);
    for (const Semiring* s : {&boolean(), &counting(), &tropical(), &max_times()}) {
      CAPTURE(names[i]);
      CAPTURE(s->name());
      for (int rep = 0; rep < 3; ++rep) {
        const auto g = random_graph(rng, w.e.k + 1, 0.8, *s);
        const auto r = roundtrip_check(w.h, w.e, g, *s);
        CHECK(r.equal);
        CHECK(r.lhs == r.rhs);
      }
    }
  }
}

TEST_CASE("reduction on a single clique returns its weight") {
  const auto w = families::witness("cycle", std::vector<int>{5});
  WeightedGraph g;
  g.n = w.e.k;
  Value total = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      g.set(u, v, u * 3 + v);
      total += u * 3 + v;
    }
  }
  CHECK(roundtrip_check(w.h, w.e, g, tropical()).lhs == total);
  CHECK(roundtrip_check(w.h, w.e, g, counting()).lhs == kclique_direct(g, w.e.k, counting()));
}

TEST_CASE("counting instance counts cliques of random graphs") {
  std::mt19937 rng(37);
  const auto graphs = oracle::corpus(4, 4);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const auto& h = graphs[rng() % graphs.size()];
    const int k = 2 + static_cast<int>(rng() % 3);
    const auto e = oracle::random_embedding(h, k, rng);
    if (!e) continue;
    WeightedGraph g = random_graph(rng, 5, 0.7, boolean());
    const auto lift = kpartite_lift(g, k, LiftMode::canonical);
    const auto out = build_instance(h, *e, lift, counting());
    validate(out.instance, counting());
    CHECK(eval_bruteforce(out.instance, counting()) == count_kcliques(g, k));
    CHECK(out.lambda == weak_edge_depth(h, *e));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("build_instance checks the part count and writes a sidecar") {
  const auto w = families::witness("cycle", std::vector<int>{4});
  WeightedGraph g;
  g.n = 3;
  g.set(0, 1, 1);
  CHECK_THROWS_AS(build_instance(w.h, w.e, kpartite_lift(g, w.e.k + 1), boolean()), InputError);
  const auto out = build_instance(w.h, w.e, kpartite_lift(g, w.e.k, LiftMode::canonical), boolean());
  const std::string side = format_sidecar(w.h, out);
  CHECK(side.find("k: " + std::to_string(w.e.k)) == 0);
  CHECK(side.find("theta 1 2:") != std::string::npos);
}
