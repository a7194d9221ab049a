#include <algorithm>
#include <map>
#include <set>

#include "hgemb/engine.hpp"
#include "hgemb/errors.hpp"
#include "hgemb/families.hpp"

namespace hgemb::engine {

std::int64_t degree_threshold(std::int64_t m, const Rational& epsilon) {
  if (m < 1) throw InputError("degree_threshold needs m >= 1");
  if (sgn(epsilon) <= 0) throw InputError("epsilon must be positive");
  // Smallest d with d^q >= m^p, for epsilon = p/q.
  const unsigned long p = epsilon.get_num().get_ui();
  const unsigned long q = epsilon.get_den().get_ui();
  Integer target, root, back;
  mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(m), p);
  mpz_root(root.get_mpz_t(), target.get_mpz_t(), q);
  mpz_pow_ui(back.get_mpz_t(), root.get_mpz_t(), q);
  if (back < target) root += 1;
  if (!root.fits_slong_p()) throw ResourceError("degree threshold does not fit 64 bits");
  return root.get_si();
}

namespace {

using Table = std::vector<std::pair<Tuple, Value>>;

// Boat edges in the order of families::boat(), vertex indices 0-based.
constexpr int kBoatEdges[9][2] = {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}, {5, 6}, {2, 7}, {4, 7}, {6, 7}};

std::vector<const Table*> boat_tables(const SumProdInstance& inst) {
  if (inst.h.num_vertices() != 8 || inst.h.num_edges() != 9) {
    throw InputError("heavy-light split expects the boat query (8 variables, 9 binary edges)");
  }
  std::vector<const Table*> out;
  for (const auto& e : kBoatEdges) {
    const VertexSet want{e[0], e[1]};
    const auto& edges = inst.h.edges();
    const auto it = std::find(edges.begin(), edges.end(), want);
    if (it == edges.end()) throw InputError("instance is not the boat query: missing edge " + inst.h.describe(want));
    out.push_back(&inst.factors[static_cast<std::size_t>(it - edges.begin())].entries);
  }
  return out;
}

// Values of the variable at `pos` in any of the tables whose degree exceeds delta.
std::set<std::int64_t> heavy_values(const std::vector<const Table*>& tables, std::size_t pos, std::int64_t delta) {
  std::set<std::int64_t> out;
  for (const Table* t : tables) {
    std::map<std::int64_t, std::int64_t> degree;
    for (const auto& [tuple, v] : *t) ++degree[tuple[pos]];
    for (const auto& [value, d] : degree) {
      if (d > delta) out.insert(value);
    }
  }
  return out;
}

Table select(const Table& t, std::size_t pos, std::int64_t value, std::size_t keep) {
  Table out;
  for (const auto& [tuple, v] : t) {
    if (tuple[pos] == value) out.emplace_back(Tuple{tuple[keep]}, v);
  }
  return out;
}

// Builds an instance from (vertex list in boat numbering, edge list) with
// the given tables; vertices are relabelled densely.
SumProdInstance sub_instance(const SumProdInstance& boat, const std::vector<int>& vars,
                             const std::vector<std::pair<VertexSet, Table>>& parts) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::int64_t>> domains;
  std::vector<int> index(8, -1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    index[static_cast<std::size_t>(vars[i])] = static_cast<int>(i);
    labels.push_back(boat.h.label(vars[i]));
    domains.push_back(boat.domains[static_cast<std::size_t>(vars[i])]);
  }
  std::vector<VertexSet> edges;
  std::vector<Factor> factors;
  for (const auto& [e, table] : parts) {
    VertexSet mapped;
    for_each_vertex(e, [&](int v) { mapped.insert(index[static_cast<std::size_t>(v)]); });
    edges.push_back(mapped);
    factors.push_back(Factor{table});
  }
  return SumProdInstance{Hypergraph(static_cast<int>(vars.size()), std::move(edges), std::move(labels)),
                         std::move(domains), std::move(factors), "boolean"};
}

}  // namespace

HeavyLightReport solve_boat_heavy_light(const SumProdInstance& inst, const Rational& epsilon,
                                        const QueryOracle& hyper_boat) {
  const Semiring& s = boolean();
  validate(inst, s);
  const auto t = boat_tables(inst);
  // t[0..2]: (x1,x2) (x1,x4) (x1,x6); t[3..5]: (x2,x3) (x4,x5) (x6,x7);
  // t[6..8]: (x3,x8) (x5,x8) (x7,x8).
  HeavyLightReport r;
  const auto m = static_cast<std::int64_t>(inst.size());
  r.delta = m == 0 ? 0 : degree_threshold(m, epsilon);
  const auto heavy1 = heavy_values({t[0], t[1], t[2]}, 0, r.delta);
  const auto heavy8 = heavy_values({t[6], t[7], t[8]}, 1, r.delta);
  r.heavy_x1 = heavy1.size();
  r.heavy_x8 = heavy8.size();

  auto edge = [](int a, int b) { return VertexSet{a, b}; };
  auto single = [](int a) { return VertexSet::single(a); };

  // Fixing a heavy x1 leaves three paths hanging off x8: a tree.
  for (auto a : heavy1) {
    const auto q = sub_instance(inst, {1, 2, 3, 4, 5, 6, 7},
                                {{single(1), select(*t[0], 0, a, 1)}, {single(3), select(*t[1], 0, a, 1)},
                                 {single(5), select(*t[2], 0, a, 1)}, {edge(1, 2), *t[3]}, {edge(3, 4), *t[4]},
                                 {edge(5, 6), *t[5]}, {edge(2, 7), *t[6]}, {edge(4, 7), *t[7]},
                                 {edge(6, 7), *t[8]}});
    if (eval_acyclic(q, s) == 1) {
      r.answer = 1;
      return r;
    }
  }
  for (auto b : heavy8) {
    const auto q = sub_instance(inst, {0, 1, 2, 3, 4, 5, 6},
                                {{edge(0, 1), *t[0]}, {edge(0, 3), *t[1]}, {edge(0, 5), *t[2]},
                                 {edge(1, 2), *t[3]}, {edge(3, 4), *t[4]}, {edge(5, 6), *t[5]},
                                 {single(2), select(*t[6], 1, b, 0)}, {single(4), select(*t[7], 1, b, 0)},
                                 {single(6), select(*t[8], 1, b, 0)}});
    if (eval_acyclic(q, s) == 1) {
      r.answer = 1;
      return r;
    }
  }

  // Light-light: join each light centre with its three neighbour lists.
  auto fold = [&](const Table& a, const Table& b, const Table& c, std::size_t centre,
                  const std::set<std::int64_t>& heavy) {
    const std::size_t other = 1 - centre;
    std::map<std::int64_t, std::vector<std::int64_t>> na, nb, nc;
    for (const auto& [tu, v] : a) na[tu[centre]].push_back(tu[other]);
    for (const auto& [tu, v] : b) nb[tu[centre]].push_back(tu[other]);
    for (const auto& [tu, v] : c) nc[tu[centre]].push_back(tu[other]);
    std::set<Tuple> joined;
    for (const auto& [x, first] : na) {
      if (heavy.count(x)) continue;
      const auto ib = nb.find(x);
      const auto ic = nc.find(x);
      if (ib == nb.end() || ic == nc.end()) continue;
      for (auto u : first) {
        for (auto v : ib->second) {
          for (auto w : ic->second) joined.insert(Tuple{u, v, w});
        }
      }
    }
    Table out;
    for (const auto& tu : joined) out.emplace_back(tu, 1);
    return out;
  };
  Table left = fold(*t[0], *t[1], *t[2], 0, heavy1);
  Table right = fold(*t[6], *t[7], *t[8], 1, heavy8);
  r.left_table = left.size();
  r.right_table = right.size();

  const Hypergraph hb = families::hyper_boat();
  // y1 y2 y3 z1 z2 z3 stand for x2 x4 x6 x3 x5 x7.
  const int from[6] = {1, 3, 5, 2, 4, 6};
  std::vector<std::vector<std::int64_t>> domains;
  for (int v : from) domains.push_back(inst.domains[static_cast<std::size_t>(v)]);
  SumProdInstance q{hb, std::move(domains),
                    {Factor{std::move(left)}, Factor{std::move(right)}, Factor{*t[3]}, Factor{*t[4]}, Factor{*t[5]}},
                    "boolean"};
  r.used_oracle = true;
  r.answer = hyper_boat(q);
  return r;
}

}  // namespace hgemb::engine
