#include <doctest.h>

#include <random>

#include "hgemb/engine.hpp"
#include "hgemb/errors.hpp"
#include "hgemb/families.hpp"
#include "hgemb/widths.hpp"
#include "oracles.hpp"

using namespace hgemb;
using namespace hgemb::engine;

namespace {

const Semiring* const kAll[] = {&boolean(), &counting(), &tropical(), &max_times()};

Value random_value(const Semiring& s, std::mt19937& rng) {
  if (s.name() == "boolean") return 1;
  if (s.name() == "tropical") return static_cast<Value>(rng() % 11) - 3;
  return 1 + static_cast<Value>(rng() % 4);
}

SumProdInstance random_instance(const Hypergraph& h, const Semiring& s, std::mt19937& rng, double density) {
  SumProdInstance inst{h, {}, {}, std::string(s.name())};
  for (int v = 0; v < h.num_vertices(); ++v) {
    const int size = 1 + static_cast<int>(rng() % 3);
    auto& d = inst.domains.emplace_back();
    for (int x = 0; x < size; ++x) d.push_back(x * 2 + (v % 2));  // sparse, non-contiguous values
  }
  std::uniform_real_distribution<double> coin(0, 1);
  for (const auto& e : h.edges()) {
    Factor f;
    const auto vars = e.members();
    Tuple t(vars.size(), 0);
    auto go = [&](auto&& self, std::size_t i) -> void {
      if (i == vars.size()) {
        if (coin(rng) < density) f.entries.emplace_back(t, random_value(s, rng));
        return;
      }
      for (auto x : inst.domains[static_cast<std::size_t>(vars[i])]) {
        t[i] = x;
        self(self, i + 1);
      }
    };
    go(go, 0);
    inst.factors.push_back(std::move(f));
  }
  return inst;
}

}  // namespace

TEST_CASE("semiring laws on sample values") {
  for (const Semiring* s : kAll) {
    CAPTURE(s->name());
    std::vector<Value> xs = {s->zero(), s->one()};
    if (s->name() == "boolean") {
      // already complete
    } else if (s->name() == "tropical") {
      xs.insert(xs.end(), {-4, 3, 7});
    } else {
      xs.insert(xs.end(), {2, 3, 5});
    }
    for (auto a : xs) {
      CHECK(s->equal(s->plus(a, s->zero()), a));
      CHECK(s->equal(s->times(a, s->one()), a));
      CHECK(s->equal(s->times(a, s->zero()), s->zero()));
      for (auto b : xs) {
        CHECK(s->equal(s->plus(a, b), s->plus(b, a)));
        CHECK(s->equal(s->times(a, b), s->times(b, a)));
        for (auto c : xs) {
          CHECK(s->equal(s->plus(s->plus(a, b), c), s->plus(a, s->plus(b, c))));
          CHECK(s->equal(s->times(s->times(a, b), c), s->times(a, s->times(b, c))));
          CHECK(s->equal(s->times(a, s->plus(b, c)), s->plus(s->times(a, b), s->times(a, c))));
        }
      }
    }
    CHECK(&semiring_by_name(s->name()) == s);
  }
  CHECK_THROWS_AS(semiring_by_name("fuzzy"), InputError);
  CHECK(tropical().format(kTropicalInfinity) == "inf");
  CHECK(tropical().parse("inf") == kTropicalInfinity);
  CHECK_THROWS_AS(boolean().parse("2"), InputError);
  CHECK_THROWS_AS(counting().parse("-1"), InputError);
}

TEST_CASE("overflow is an error, not a wrap") {
  const Value big = std::numeric_limits<Value>::max() / 2 + 1;
  CHECK_THROWS_AS(counting().times(big, 2), ResourceError);
  CHECK_THROWS_AS(counting().plus(big, big), ResourceError);
  CHECK_THROWS_AS(tropical().times(big, big), ResourceError);
}

TEST_CASE("backtracking evaluator equals the full domain product") {
  const auto graphs = oracle::corpus(4, 4);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& h = graphs[rng() % graphs.size()];
    const Semiring& s = *kAll[trial % 4];
    const auto inst = random_instance(h, s, rng, 0.3 + 0.6 * (trial % 3) / 2.0);
    CAPTURE(trial);
    CHECK(s.equal(eval_bruteforce(inst, s), oracle::naive_sumprod(inst, s)));
    if (is_acyclic(h)) CHECK(s.equal(eval_acyclic(inst, s), oracle::naive_sumprod(inst, s)));
  }
}

TEST_CASE("acyclic evaluator refuses cyclic queries") {
  std::mt19937 rng(1);
  const auto inst = random_instance(families::cycle(4), counting(), rng, 0.5);
  CHECK_THROWS_AS(eval_acyclic(inst, counting()), InputError);
}

TEST_CASE("instance text round-trips") {
  std::mt19937 rng(9);
  for (const Semiring* s : kAll) {
    const auto inst = random_instance(families::pyramid(), *s, rng, 0.6);
    const auto back = parse_instance(format_instance(inst, *s));
    CHECK(back.semiring == s->name());
    CHECK(back.h == inst.h);
    CHECK(back.domains == inst.domains);
    CHECK(s->equal(eval_bruteforce(back, *s), eval_bruteforce(inst, *s)));
  }
  const char* text =
      "semiring: tropical\n"
      "domain a: 0 1\n"
      "domain b: 0 1\n"
      "factor edge(b a): (1,0)=4 (0,0)=inf (0,1)\n";
  const auto inst = parse_instance(text);
  // Listed as (b, a); stored in vertex order (a, b). The inf entry is dropped.
  REQUIRE(inst.factors[0].entries.size() == 2);
  CHECK(eval_bruteforce(inst, tropical()) == 0);
  CHECK_THROWS_AS(parse_instance("semiring: boolean\ndomain a: 0\nfactor edge(a): (1)\n"), InputError);
  CHECK_THROWS_AS(parse_instance("semiring: boolean\ndomain a: 0\nfactor edge(a): (0) (0)\n"), InputError);
}

TEST_CASE("k-clique sums") {
  WeightedGraph g;
  g.n = 4;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) g.set(u, v, u + v + 1);
  }
  CHECK(kclique_direct(g, 3, counting()) == 2 * 3 * 4 + 2 * 4 * 5 + 3 * 4 * 6 + 4 * 5 * 6);
  WeightedGraph unit = g;
  for (auto& [uv, w] : unit.weights) w = 1;
  CHECK(kclique_direct(unit, 4, boolean()) == 1);
  CHECK(kclique_direct(g, 3, tropical()) == 2 + 3 + 4);
  CHECK(kclique_direct(g, 5, counting()) == 0);
  CHECK_THROWS_AS(kclique_direct(g, 1, counting()), InputError);

  const auto back = parse_graph(format_graph(g, counting()), counting());
  CHECK(back.weights == g.weights);
  CHECK_THROWS_AS(parse_graph("n: 3\nedge 0 0\n", counting()), InputError);
  CHECK_THROWS_AS(parse_graph("n: 3\nedge 0 5\n", counting()), InputError);
}

TEST_CASE("degree threshold is an exact ceiling") {
  CHECK(degree_threshold(16, Rational(1, 2)) == 4);
  CHECK(degree_threshold(17, Rational(1, 2)) == 5);
  CHECK(degree_threshold(81, Rational(1, 4)) == 3);
  CHECK(degree_threshold(82, Rational(1, 4)) == 4);
  CHECK(degree_threshold(1, Rational(1, 4)) == 1);
  CHECK(degree_threshold(1000, Rational(2, 3)) == 100);
  CHECK_THROWS_AS(degree_threshold(10, Rational(0)), InputError);
}

TEST_CASE("heavy-light split agrees with direct evaluation on small boats") {
  std::mt19937 rng(31);
  const Hypergraph boat = families::boat();
  auto oracle_call = [](const SumProdInstance& q) { return eval_bruteforce(q, boolean()); };
  int yes = 0, heavy = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = random_instance(boat, boolean(), rng, 0.35 + 0.1 * (trial % 5));
    const Value direct = eval_bruteforce(inst, boolean());
    for (auto eps : {Rational(1, 4), Rational(1, 2)}) {
      const auto r = solve_boat_heavy_light(inst, eps, oracle_call);
      CHECK(r.answer == direct);
      heavy += r.heavy_x1 + r.heavy_x8 > 0 ? 1 : 0;
    }
    yes += static_cast<int>(direct);
  }
  CHECK(yes > 10);
  CHECK(yes < 110);
  CHECK(heavy > 0);
  CHECK_THROWS_AS(solve_boat_heavy_light(random_instance(families::cycle(4), boolean(), rng, 0.5), Rational(1, 2),
                                         oracle_call),
                  InputError);
}
