#include "hgemb/widths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "common/text.hpp"
#include "hgemb/errors.hpp"
#include "hgemb/kernels.hpp"
#include "hgemb/ratlp.hpp"

namespace hgemb {

std::vector<std::string> check_tree_decomposition(const Hypergraph& h, const TreeDecomposition& td) {
  std::vector<std::string> out;
  const std::size_t m = td.bags.size();
  if (td.parent.size() != m) {
    out.push_back("parent list and bag list differ in length");
    return out;
  }
  std::size_t roots = 0;
  for (std::size_t t = 0; t < m; ++t) {
    if (td.parent[t] < 0) {
      ++roots;
    } else if (static_cast<std::size_t>(td.parent[t]) >= m) {
      out.push_back("node " + std::to_string(t) + " has an out-of-range parent");
      return out;
    }
  }
  if (m > 0 && roots != 1) out.push_back("expected exactly one root, found " + std::to_string(roots));
  // Every node must reach the root without revisiting a node.
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t steps = 0;
    for (int u = static_cast<int>(t); u >= 0; u = td.parent[static_cast<std::size_t>(u)]) {
      if (++steps > m) {
        out.push_back("parent links contain a cycle");
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const bool covered =
        std::any_of(td.bags.begin(), td.bags.end(), [&](VertexSet b) { return h.edge(i).subset_of(b); });
    if (!covered) out.push_back("edge " + h.describe(h.edge(i)) + " lies in no bag");
  }
  for (int v = 0; v < h.num_vertices(); ++v) {
    // Nodes holding v form a subtree iff exactly one of them has a parent
    // that does not hold v.
    std::size_t holders = 0, tops = 0;
    for (std::size_t t = 0; t < m; ++t) {
      if (!td.bags[t].contains(v)) continue;
      ++holders;
      const int p = td.parent[t];
      if (p < 0 || !td.bags[static_cast<std::size_t>(p)].contains(v)) ++tops;
    }
    if (holders == 0) out.push_back("vertex " + h.label(v) + " lies in no bag");
    else if (tops != 1) out.push_back("bags holding " + h.label(v) + " are not connected");
  }
  return out;
}

bool is_acyclic(const Hypergraph& h) {
  std::vector<VertexSet> edges = h.edges();
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < h.num_vertices(); ++v) {
      const auto holders = std::count_if(edges.begin(), edges.end(), [&](VertexSet e) { return e.contains(v); });
      if (holders != 1) continue;
      for (auto& e : edges) e.erase(v);
      changed = true;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      bool drop = edges[i].empty();
      for (std::size_t j = 0; j < edges.size() && !drop; ++j) {
        if (j != i && edges[i].subset_of(edges[j])) drop = true;
      }
      if (drop) {
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return edges.size() <= 1;
}

namespace {

std::vector<VertexSet> adjacency_of(const Hypergraph& h) {
  std::vector<VertexSet> adj;
  for (int v = 0; v < h.num_vertices(); ++v) adj.push_back(h.neighbors(v));
  return adj;
}

bool chordal_adjacency(const std::vector<VertexSet>& adj) {
  const int n = static_cast<int>(adj.size());
  // Maximum cardinality search numbers vertices n-1 down to 0; the reverse
  // visiting order is a perfect elimination order iff the graph is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0), order;
  VertexSet visited;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (visited.contains(v)) continue;
      if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    visited.insert(pick);
    order.push_back(pick);
    for_each_vertex(adj[static_cast<std::size_t>(pick)] - visited, [&](int u) { ++weight[static_cast<std::size_t>(u)]; });
  }
  // Eliminating order[n-1], ..., order[0]: each vertex's earlier-visited
  // neighbours must form a clique.
  VertexSet earlier;
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    const VertexSet nb = adj[static_cast<std::size_t>(v)] & earlier;
    if (!nb.empty()) {
      // Enough to check that the most recently visited of them is adjacent to the rest.
      int parent = -1;
      for (int j = i - 1; j >= 0; --j) {
        if (nb.contains(order[static_cast<std::size_t>(j)])) {
          parent = order[static_cast<std::size_t>(j)];
          break;
        }
      }
      VertexSet rest = nb;
      rest.erase(parent);
      if (!rest.subset_of(adj[static_cast<std::size_t>(parent)])) return false;
    }
    earlier.insert(v);
  }
  return true;
}

// Bron-Kerbosch with pivoting; cliques returned in canonical order.
void maximal_cliques(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                     std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const VertexSet px = p | x;
  const int pivot = px.lowest();
  for_each_vertex(p - adj[static_cast<std::size_t>(pivot)], [&](int v) {
    const VertexSet nb = adj[static_cast<std::size_t>(v)];
    maximal_cliques(adj, r | VertexSet::single(v), p & nb, x & nb, out);
    p.erase(v);
    x.insert(v);
  });
}

BagSet maximal_cliques(const std::vector<VertexSet>& adj) {
  BagSet out;
  maximal_cliques(adj, {}, VertexSet::full(static_cast<int>(adj.size())), {}, out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
  return out;
}

class EliminationSearch {
 public:
  explicit EliminationSearch(std::vector<VertexSet> adj) : n_(static_cast<int>(adj.size())), adj_(std::move(adj)) {}

  std::set<std::uint64_t> run() {
    descend(adj_, VertexSet::full(n_), 0);
    return fills_;
  }

  // Triangular index of the pair u < v; at most 36 pairs for 9 vertices.
  int pair_index(int u, int v) const { return u * (2 * n_ - u - 1) / 2 + (v - u - 1); }

 private:
  void descend(const std::vector<VertexSet>& adj, VertexSet remaining, std::uint64_t fill) {
    if (remaining.empty()) {
      fills_.insert(fill);
      return;
    }
    for_each_vertex(remaining, [&](int v) {
      std::vector<VertexSet> next = adj;
      std::uint64_t next_fill = fill;
      const VertexSet nb = adj[static_cast<std::size_t>(v)] & remaining;
      for_each_vertex(nb, [&](int u) {
        for_each_vertex(nb - next[static_cast<std::size_t>(u)], [&](int w) {
          if (w <= u) return;
          next[static_cast<std::size_t>(u)].insert(w);
          next[static_cast<std::size_t>(w)].insert(u);
          next_fill |= std::uint64_t{1} << pair_index(u, w);
        });
      });
      VertexSet rest = remaining;
      rest.erase(v);
      descend(next, rest, next_fill);
    });
  }

  int n_;
  std::vector<VertexSet> adj_;
  std::set<std::uint64_t> fills_;
};

// Every fill edge must be the only chord of some 4-cycle of the filled graph.
bool fill_is_minimal(const std::vector<VertexSet>& filled, const std::vector<VertexSet>& fill) {
  for (const VertexSet e : fill) {
    const int u = e.lowest();
    const int w = (e - VertexSet::single(u)).lowest();
    const VertexSet common = filled[static_cast<std::size_t>(u)] & filled[static_cast<std::size_t>(w)];
    bool witnessed = false;
    for_each_vertex(common, [&](int a) {
      if (!(common - filled[static_cast<std::size_t>(a)] - VertexSet::single(a)).empty()) witnessed = true;
    });
    if (!witnessed) return false;
  }
  return true;
}

void guard_size(const Hypergraph& h, int max_n) {
  if (h.num_vertices() > max_n) {
    throw ResourceError("triangulation enumeration limited to " + std::to_string(max_n) + " vertices, got " +
                        std::to_string(h.num_vertices()));
  }
  if (h.num_vertices() > 9) throw ResourceError("triangulation enumeration supports at most 9 vertices");
}

struct Triangulation {
  std::vector<VertexSet> fill;
  std::vector<VertexSet> filled;  // adjacency after the fill
};

std::vector<Triangulation> triangulate(const std::vector<VertexSet>& adj) {
  const int n = static_cast<int>(adj.size());
  EliminationSearch search(adj);
  std::vector<Triangulation> out;
  for (std::uint64_t bits : search.run()) {
    Triangulation t;
    t.filled = adj;
    for (int u = 0; u < n; ++u) {
      for (int w = u + 1; w < n; ++w) {
        if (!((bits >> search.pair_index(u, w)) & 1)) continue;
        t.fill.push_back(VertexSet{u, w});
        t.filled[static_cast<std::size_t>(u)].insert(w);
        t.filled[static_cast<std::size_t>(w)].insert(u);
      }
    }
    if (!fill_is_minimal(t.filled, t.fill)) continue;
    std::sort(t.fill.begin(), t.fill.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) {
    if (a.fill.size() != b.fill.size()) return a.fill.size() < b.fill.size();
    return std::lexicographical_compare(a.fill.begin(), a.fill.end(), b.fill.begin(), b.fill.end(),
                                        [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); });
  });
  return out;
}

}  // namespace

bool is_chordal(const Hypergraph& h) { return chordal_adjacency(adjacency_of(h)); }

std::vector<std::vector<VertexSet>> minimal_triangulations(const Hypergraph& g, int max_n) {
  if (!g.is_graph()) throw InputError("minimal_triangulations expects a graph (binary edges only)");
  guard_size(g, max_n);
  std::vector<std::vector<VertexSet>> out;
  for (auto& t : triangulate(adjacency_of(g))) out.push_back(std::move(t.fill));
  return out;
}

std::vector<BagSet> proper_tree_decompositions(const Hypergraph& h, int max_n) {
  guard_size(h, max_n);
  std::vector<BagSet> out;
  for (const auto& t : triangulate(adjacency_of(h))) out.push_back(maximal_cliques(t.filled));
  return out;
}

TreeDecomposition clique_tree(const BagSet& bags) {
  TreeDecomposition td;
  const std::size_t m = bags.size();
  td.bags = bags;
  td.parent.assign(m, -1);
  if (m == 0) return td;
  // Prim's algorithm on intersection sizes; ties go to the lower index.
  std::vector<bool> in_tree(m, false);
  std::vector<int> best(m, -1), link(m, -1);
  in_tree[0] = true;
  for (std::size_t t = 1; t < m; ++t) {
    best[t] = (bags[t] & bags[0]).size();
    link[t] = 0;
  }
  for (std::size_t added = 1; added < m; ++added) {
    std::size_t pick = m;
    for (std::size_t t = 0; t < m; ++t) {
      if (!in_tree[t] && (pick == m || best[t] > best[pick])) pick = t;
    }
    in_tree[pick] = true;
    td.parent[pick] = link[pick];
    for (std::size_t t = 0; t < m; ++t) {
      if (in_tree[t]) continue;
      const int w = (bags[t] & bags[pick]).size();
      if (w > best[t]) {
        best[t] = w;
        link[t] = static_cast<int>(pick);
      }
    }
  }
  return td;
}

Rational fractional_edge_cover(const Hypergraph& h, VertexSet s) {
  if (s.empty()) throw InputError("fractional_edge_cover of the empty set");
  h.check_in_range(s);
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge(i).intersects(s)) used.push_back(i);
  }
  lp::LinearProgram p(lp::Sense::minimize, used.size());
  for (auto& c : p.objective) c = 1;
  for_each_vertex(s, [&](int v) {
    auto& row = p.add(lp::Relation::greater_equal, 1);
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (h.edge(used[j]).contains(v)) row.coeffs[j] = 1;
    }
  });
  const auto out = lp::solve_lp(p);
  if (out.status != lp::Status::optimal) throw InputError("some vertex of " + h.describe(s) + " lies in no edge");
  return out.value;
}

Rational fhw(const Hypergraph& h, int max_n) {
  std::map<std::uint32_t, Rational> cache;
  auto rho = [&](VertexSet b) -> const Rational& {
    auto it = cache.find(b.bits());
    if (it == cache.end()) it = cache.emplace(b.bits(), fractional_edge_cover(h, b)).first;
    return it->second;
  };
  std::optional<Rational> best;
  for (const auto& bags : proper_tree_decompositions(h, max_n)) {
    Rational width = 0;
    for (const VertexSet b : bags) width = std::max(width, rho(b));
    if (!best || width < *best) best = width;
  }
  return best.value_or(Rational(0));
}

SetFunction::SetFunction(int n) : n_(n) {
  if (n < 0 || n > 20) throw InputError("set functions are limited to 20 vertices");
  values_.assign(std::size_t{1} << n, Rational(0));
}

SetFunction coverage_function(const Hypergraph& h, const Embedding& e) {
  const auto report = is_valid_embedding(h, e);
  if (!report.valid) throw InputError("coverage function needs a valid embedding: " + report.violations.front());
  const int n = h.num_vertices();
  SetFunction f(n);
  std::vector<std::uint32_t> images;
  for (const VertexSet s : e.images) images.push_back(s.bits());
  std::vector<std::uint32_t> counts(std::size_t{1} << n);
  kernels::count_intersecting_range(images, 0, counts);
  for (std::size_t s = 0; s < counts.size(); ++s) {
    Rational v(static_cast<long>(counts[s]), static_cast<long>(report.wed));
    v.canonicalize();
    f[VertexSet(static_cast<std::uint32_t>(s))] = v;
  }
  return f;
}

SetFunctionCertificate certify_set_function(const Hypergraph& h, const SetFunction& f) {
  if (f.num_vertices() != h.num_vertices()) throw InputError("set function and hypergraph sizes differ");
  const int n = h.num_vertices();
  SetFunctionCertificate c;
  c.zero_at_empty = sgn(f(VertexSet{})) == 0;
  c.monotone = c.submodular = c.edge_dominated = true;
  const std::uint32_t all = VertexSet::full(n).bits();
  for (std::uint32_t bits = 0; bits <= all; ++bits) {
    const VertexSet s(bits);
    const VertexSet outside = VertexSet::full(n) - s;
    for_each_vertex(outside, [&](int u) {
      const VertexSet su = s | VertexSet::single(u);
      if (c.monotone && f(su) < f(s)) {
        c.monotone = false;
        c.monotone_violation = {{s, su}};
      }
      for_each_vertex(outside, [&](int v) {
        if (v <= u || !c.submodular) return;
        const VertexSet sv = s | VertexSet::single(v);
        if (f(su) + f(sv) < f(su | sv) + f(s)) {
          c.submodular = false;
          c.submodular_violation = {{su, sv}};
        }
      });
    });
  }
  for (const VertexSet e : h.edges()) {
    if (f(e) > 1) {
      c.edge_dominated = false;
      c.edge_violation = {{e, e}};
      break;
    }
  }
  return c;
}

Rational width_lower_bound(const Hypergraph& h, const SetFunction& f, int max_n) {
  const auto cert = certify_set_function(h, f);
  if (!cert.all()) throw InputError("set function is not a certified width function");
  std::optional<Rational> best;
  for (const auto& bags : proper_tree_decompositions(h, max_n)) {
    Rational width = 0;
    for (const VertexSet b : bags) width = std::max(width, f(b));
    if (!best || width < *best) best = width;
  }
  return best.value_or(Rational(0));
}

bool common_bag_check(const Hypergraph& h, const Embedding& e, int max_n) {
  for (const auto& bags : proper_tree_decompositions(h, max_n)) {
    const bool found = std::any_of(bags.begin(), bags.end(), [&](VertexSet b) {
      return std::all_of(e.images.begin(), e.images.end(), [&](VertexSet s) { return s.intersects(b); });
    });
    if (!found) return false;
  }
  return true;
}

SetFunction hyper_boat_width_function() {
  SetFunction f(6);
  const VertexSet ys{0, 1, 2};
  const VertexSet zs{3, 4, 5};
  for (std::uint32_t bits = 1; bits < 64; ++bits) {
    const VertexSet s(bits);
    const int a = (s & ys).size();
    const int b = (s & zs).size();
    Rational v = 2;
    if (a + b == 1) {
      v = Rational(1, 2);
    } else if (a + b == 2 || (a == 3 && b == 0) || (a == 0 && b == 3)) {
      v = 1;  // pairs and the two ternary edges
    } else if (a + b == 3 || (a == 3 && b == 1) || (a == 1 && b == 3)) {
      v = Rational(3, 2);
    }
    f[s] = v;
  }
  return f;
}

SetFunction parse_set_function(const Hypergraph& h, std::string_view input) {
  const int n = h.num_vertices();
  SetFunction f(n);
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (const auto& line : text::logical_lines(input)) {
    const auto colon = line.content.rfind(':');
    if (colon == std::string_view::npos) text::fail(line.number, "expected 'value <names> : <rational>'");
    const auto head = text::split_ws(line.content.substr(0, colon));
    const auto value = text::trim(line.content.substr(colon + 1));
    if (head.empty() || head[0] != "value") text::fail(line.number, "expected 'value'");
    VertexSet s;
    if (head.size() == 2 && head[1] == "-") {
      // empty set
    } else {
      for (std::size_t i = 1; i < head.size(); ++i) {
        const int v = h.find_label(head[i]);
        if (v < 0) text::fail(line.number, "unknown vertex '" + std::string(head[i]) + "'");
        s.insert(v);
      }
      if (s.empty()) text::fail(line.number, "use '-' for the empty set");
    }
    if (seen[s.bits()]) text::fail(line.number, "subset " + h.describe(s) + " listed twice");
    seen[s.bits()] = true;
    try {
      f[s] = parse_rational(value);
    } catch (const InputError& e) {
      text::fail(line.number, e.what());
    }
  }
  for (std::size_t bits = 0; bits < seen.size(); ++bits) {
    if (!seen[bits]) throw InputError("set function misses subset " + h.describe(VertexSet(static_cast<std::uint32_t>(bits))));
  }
  return f;
}

SetFunction read_set_function(const Hypergraph& h, const std::string& path) {
  return parse_set_function(h, text::read_file(path));
}

std::string format_set_function(const Hypergraph& h, const SetFunction& f) {
  std::ostringstream out;
  for (std::size_t bits = 0; bits < f.values().size(); ++bits) {
    const VertexSet s(static_cast<std::uint32_t>(bits));
    out << "value";
    if (s.empty()) out << " -";
    for_each_vertex(s, [&](int v) { out << ' ' << h.label(v); });
    out << " : " << to_string(f(s)) << '\n';
  }
  return out.str();
}

}  // namespace hgemb
