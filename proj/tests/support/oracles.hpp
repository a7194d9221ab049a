#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library beyond its data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hgemb/embedding.hpp"
#include "hgemb/engine.hpp"
#include "hgemb/hypergraph.hpp"
#include "hgemb/ratlp.hpp"

namespace oracle {

using hgemb::Hypergraph;
using hgemb::Rational;
using hgemb::VertexSet;

// Breadth-first search over the vertices of s, stepping along hyperedges.
inline bool bfs_connected(const Hypergraph& h, VertexSet s) {
  if (s.empty()) return false;
  const auto members = s.members();
  std::vector<int> queue{members.front()};
  std::set<int> seen{members.front()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (const auto& e : h.edges()) {
      if (!e.contains(u)) continue;
      for (int v : members) {
        if (e.contains(v) && !seen.count(v)) {
          seen.insert(v);
          queue.push_back(v);
        }
      }
    }
  }
  return seen.size() == members.size();
}

inline bool touch(const Hypergraph& h, VertexSet a, VertexSet b) {
  if ((a.bits() & b.bits()) != 0) return true;
  for (const auto& e : h.edges()) {
    if ((e.bits() & a.bits()) && (e.bits() & b.bits())) return true;
  }
  return false;
}

inline std::vector<VertexSet> connected_sets(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for (std::uint32_t m = 1; m < (1u << h.num_vertices()); ++m) {
    if (bfs_connected(h, VertexSet(m))) out.emplace_back(m);
  }
  return out;
}

inline int depth_of(const Hypergraph& h, const std::vector<VertexSet>& images) {
  int best = 0;
  for (const auto& e : h.edges()) {
    int d = 0;
    for (const auto& s : images) d += (s.bits() & e.bits()) ? 1 : 0;
    best = std::max(best, d);
  }
  return best;
}

// Minimum weak edge depth over all k-clique embeddings, by exhaustive
// search over nondecreasing sequences of connected sets.
inline int min_wed(const Hypergraph& h, int k) {
  const auto sets = connected_sets(h);
  int best = k + 1;
  std::vector<VertexSet> chosen;
  auto go = [&](auto&& self, std::size_t from) -> void {
    if (depth_of(h, chosen) >= best) return;
    if (static_cast<int>(chosen.size()) == k) {
      best = depth_of(h, chosen);
      return;
    }
    for (std::size_t i = from; i < sets.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen) ok = ok && touch(h, c, sets[i]);
      if (!ok) continue;
      chosen.push_back(sets[i]);
      self(self, i);
      chosen.pop_back();
    }
  };
  go(go, 0);
  return best;
}

// Minimum of a bounded LP with x >= 0 by enumerating basic solutions: pick
// n of the constraints (with x_i = 0 included) as equalities, solve by
// Gaussian elimination, keep the feasible ones. nullopt when infeasible.
inline std::optional<Rational> lp_vertex_min(const hgemb::lp::LinearProgram& p) {
  using hgemb::lp::Relation;
  const std::size_t n = p.num_vars();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : p.constraints) {
    rows.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> r(n);
    r[i] = 1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  auto solve_pick = [&]() {
    std::vector<std::vector<Rational>> a;
    for (auto r : pick) {
      auto row = rows[r];
      row.push_back(rhs[r]);
      a.push_back(row);
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) return;
      std::swap(a[piv], a[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        const Rational f = a[r][col] / a[col][col];
        for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    for (const auto& v : x) {
      if (v < 0) return;
    }
    for (const auto& c : p.constraints) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < n; ++i) lhs += c.coeffs[i] * x[i];
      if (c.relation == Relation::less_equal && lhs > c.rhs) return;
      if (c.relation == Relation::greater_equal && lhs < c.rhs) return;
      if (c.relation == Relation::equal && lhs != c.rhs) return;
    }
    Rational value = 0;
    for (std::size_t i = 0; i < n; ++i) value += p.objective[i] * x[i];
    if (p.sense == hgemb::lp::Sense::maximize) value = -value;
    if (!best || value < *best) best = value;
  };
  auto choose = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == n) {
      solve_pick();
      return;
    }
    for (std::size_t r = from; r < rows.size(); ++r) {
      pick[depth] = r;
      self(self, depth + 1, r + 1);
    }
  };
  choose(choose, 0, 0);
  if (best && p.sense == hgemb::lp::Sense::maximize) return -*best;
  return best;
}

// Chordality by repeatedly deleting a simplicial vertex.
inline bool chordal_by_simplicial(int n, const std::vector<std::uint32_t>& adj_in) {
  auto adj = adj_in;
  std::uint32_t alive = n >= 32 ? ~0u : (1u << n) - 1u;
  while (alive) {
    int found = -1;
    for (int v = 0; v < n && found < 0; ++v) {
      if (!((alive >> v) & 1u)) continue;
      const std::uint32_t nb = adj[static_cast<std::size_t>(v)] & alive;
      bool clique = true;
      for (int u = 0; u < n && clique; ++u) {
        if ((nb >> u) & 1u) clique = (nb & ~(1u << u) & ~adj[static_cast<std::size_t>(u)]) == 0;
      }
      if (clique) found = v;
    }
    if (found < 0) return false;
    alive &= ~(1u << found);
  }
  return true;
}

// Inclusion-minimal chordal fill-ins of a graph, trying every subset of the
// missing edges. Fills are returned as sorted (u, v) lists.
inline std::set<std::vector<std::pair<int, int>>> minimal_fills(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  std::vector<std::pair<int, int>> missing;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!((adj[static_cast<std::size_t>(u)] >> v) & 1u)) missing.emplace_back(u, v);
    }
  }
  std::vector<std::uint64_t> chordal_fills;
  for (std::uint64_t mask = 0; mask < (1ull << missing.size()); ++mask) {
    auto a = adj;
    for (std::size_t i = 0; i < missing.size(); ++i) {
      if ((mask >> i) & 1u) {
        auto [u, v] = missing[i];
        a[static_cast<std::size_t>(u)] |= 1u << v;
        a[static_cast<std::size_t>(v)] |= 1u << u;
      }
    }
    if (chordal_by_simplicial(n, a)) chordal_fills.push_back(mask);
  }
  std::set<std::vector<std::pair<int, int>>> out;
  for (auto f : chordal_fills) {
    bool minimal = true;
    for (auto g : chordal_fills) {
      if (g != f && (g & f) == g) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::pair<int, int>> fill;
    for (std::size_t i = 0; i < missing.size(); ++i) {
      if ((f >> i) & 1u) fill.push_back(missing[i]);
    }
    out.insert(fill);
  }
  return out;
}

// Sum over the full product of the domains.
inline hgemb::engine::Value naive_sumprod(const hgemb::engine::SumProdInstance& inst,
                                          const hgemb::engine::Semiring& s) {
  using hgemb::engine::Tuple;
  using hgemb::engine::Value;
  const int n = inst.h.num_vertices();
  std::vector<std::map<Tuple, Value>> tables;
  for (const auto& f : inst.factors) tables.emplace_back(f.entries.begin(), f.entries.end());
  std::vector<std::int64_t> val(static_cast<std::size_t>(n));
  Value total = s.zero();
  auto go = [&](auto&& self, int v) -> void {
    if (v == n) {
      Value prod = s.one();
      for (std::size_t e = 0; e < tables.size(); ++e) {
        Tuple t;
        for (int x : inst.h.edge(e).members()) t.push_back(val[static_cast<std::size_t>(x)]);
        const auto it = tables[e].find(t);
        if (it == tables[e].end()) return;
        prod = s.times(prod, it->second);
      }
      total = s.plus(total, prod);
      return;
    }
    for (auto d : inst.domains[static_cast<std::size_t>(v)]) {
      val[static_cast<std::size_t>(v)] = d;
      self(self, v + 1);
    }
  };
  go(go, 0);
  return total;
}

// Connected hypergraphs with 1..max_n vertices and 1..max_m distinct edges
// covering every vertex, one per isomorphism class.
inline std::vector<Hypergraph> corpus(int max_n = 5, int max_m = 5) {
  std::vector<Hypergraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::uint32_t all = (1u << n) - 1u;
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> chosen;
    auto emit = [&]() {
      std::uint32_t cover = 0;
      for (auto e : chosen) cover |= e;
      if (cover != all) return;
      std::vector<VertexSet> es;
      for (auto e : chosen) es.emplace_back(e);
      const Hypergraph h(n, es);
      if (!bfs_connected(h, h.vertices())) return;
      std::vector<std::uint32_t> best;
      for (const auto& perm : perms) {
        std::vector<std::uint32_t> mapped;
        for (auto e : chosen) {
          std::uint32_t m = 0;
          for (int v = 0; v < n; ++v) {
            if ((e >> v) & 1u) m |= 1u << perm[static_cast<std::size_t>(v)];
          }
          mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = mapped;
      }
      if (seen.insert(best).second) out.push_back(h);
    };
    auto go = [&](auto&& self, std::uint32_t from) -> void {
      if (!chosen.empty()) emit();
      if (static_cast<int>(chosen.size()) == max_m) return;
      for (std::uint32_t e = from; e <= all; ++e) {
        chosen.push_back(e);
        self(self, e + 1);
        chosen.pop_back();
      }
    };
    go(go, 1);
  }
  return out;
}

// A random embedding whose images pairwise touch, or nullopt after a few
// failed attempts.
inline std::optional<hgemb::Embedding> random_embedding(const Hypergraph& h, int k, std::mt19937& rng) {
  const auto sets = connected_sets(h);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  for (int attempt = 0; attempt < 50; ++attempt) {
    hgemb::Embedding e;
    e.k = k;
    for (int tries = 0; tries < 200 && static_cast<int>(e.images.size()) < k; ++tries) {
      const VertexSet s = sets[pick(rng)];
      bool ok = true;
      for (const auto& c : e.images) ok = ok && touch(h, c, s);
      if (ok) e.images.push_back(s);
    }
    if (static_cast<int>(e.images.size()) == k) {
      std::shuffle(e.images.begin(), e.images.end(), rng);
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace oracle
