#pragma once

// Semirings and sum-of-products evaluation over hypergraph-shaped queries.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgemb/hypergraph.hpp"
#include "hgemb/rational.hpp"

namespace hgemb::engine {

// Every built-in semiring encodes its carrier in a 64-bit integer; overflow
// of the counting or max-times product raises ResourceError rather than
// wrapping.
using Value = std::int64_t;

class Semiring {
 public:
  virtual ~Semiring() = default;
  virtual std::string_view name() const = 0;
  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value plus(Value a, Value b) const = 0;
  virtual Value times(Value a, Value b) const = 0;
  virtual bool contains(Value v) const = 0;
  virtual bool equal(Value a, Value b) const { return a == b; }
  // True when plus(v, x) == v for every x, so a running sum that reaches v
  // can stop early.
  virtual bool absorbs(Value) const { return false; }
  virtual Value parse(std::string_view token) const;
  virtual std::string format(Value v) const;
};

// ({0,1}, or, and)
const Semiring& boolean();
// (naturals, +, *)
const Semiring& counting();
// (integers and +inf, min, +); infinity is the zero and never stored.
const Semiring& tropical();
// (naturals, max, *)
const Semiring& max_times();
// boolean | counting | tropical | max_times
const Semiring& semiring_by_name(std::string_view name);

inline constexpr Value kTropicalInfinity = INT64_MAX;

using Tuple = std::vector<std::int64_t>;

struct Factor {
  // Tuple components follow the edge's vertices in increasing index order.
  std::vector<std::pair<Tuple, Value>> entries;
};

struct SumProdInstance {
  Hypergraph h;
  std::vector<std::vector<std::int64_t>> domains;  // per vertex
  std::vector<Factor> factors;                     // per edge
  std::string semiring = "boolean";

  std::size_t size() const;  // total number of stored tuples
};

// Throws InputError on arity mismatches, values outside a domain, duplicate
// tuples, stored zeros, or values outside the semiring.
void validate(const SumProdInstance& inst, const Semiring& s);

// Text format:
//   semiring: tropical
//   domain x1: 0 1 2
//   factor edge(x1 x2): (0,1)=3 (1,2)=5
// Vertices are the domain names in order; each factor line adds one edge.
// '=v' may be omitted for the semiring one; entries equal to zero (e.g.
// tropical 'inf') are dropped.
SumProdInstance parse_instance(std::string_view text);
SumProdInstance read_instance(const std::string& path);
std::string format_instance(const SumProdInstance& inst, const Semiring& s);

// Backtracking over factor tuples (never the full domain product) with a
// static connected smallest-table-first edge order.
Value eval_bruteforce(const SumProdInstance& inst, const Semiring& s);

// Leaf-to-root message passing on a join forest. Throws InputError when the
// hypergraph is not acyclic.
Value eval_acyclic(const SumProdInstance& inst, const Semiring& s);

struct WeightedGraph {
  int n = 0;
  std::map<std::pair<int, int>, Value> weights;  // keys with first < second

  void set(int u, int v, Value w);
  // Stored weight, or nullptr for a non-edge.
  const Value* find(int u, int v) const;
};

// Text format: 'n: 6' then 'edge u v [weight]' lines (weight defaults to the
// semiring one).
WeightedGraph parse_graph(std::string_view text, const Semiring& s);
WeightedGraph read_graph(const std::string& path, const Semiring& s);
std::string format_graph(const WeightedGraph& g, const Semiring& s);

// Semiring sum over all k-cliques of the semiring product of their edge
// weights.
Value kclique_direct(const WeightedGraph& g, int k, const Semiring& s);

using QueryOracle = std::function<Value(const SumProdInstance&)>;

struct HeavyLightReport {
  Value answer = 0;
  std::int64_t delta = 0;            // ceil(m^epsilon)
  std::size_t heavy_x1 = 0;
  std::size_t heavy_x8 = 0;
  std::size_t left_table = 0;        // tuples in the (x2, x4, x6) table
  std::size_t right_table = 0;       // tuples in the (x3, x5, x7) table
  bool used_oracle = false;
};

// Boolean boat query (vertex order x1..x8, edges as in families::boat()).
// Values of x1 (x8) whose degree in one of their three tables exceeds
// delta = ceil(m^epsilon) are handled one at a time through acyclic residual
// queries; the light remainder is folded into a hyper-boat instance with
// ternary tables (x2, x4, x6) and (x3, x5, x7) and handed to `hyper_boat`.
HeavyLightReport solve_boat_heavy_light(const SumProdInstance& inst, const Rational& epsilon,
                                        const QueryOracle& hyper_boat);

// ceil(m^epsilon), exactly, for m >= 1 and epsilon > 0.
std::int64_t degree_threshold(std::int64_t m, const Rational& epsilon);

}  // namespace hgemb::engine
