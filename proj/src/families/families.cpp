#include "hgemb/families.hpp"

#include <map>

#include "hgemb/errors.hpp"

namespace hgemb::families {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Builds an embedding of C_k from preimages: inverse[v] lists the clique
// vertices (1-based) whose image contains vertex v.
Embedding from_inverse(const Hypergraph& h, int k, const std::map<std::string, std::vector<int>>& inverse) {
  Embedding e;
  e.k = k;
  e.images.assign(static_cast<std::size_t>(k), VertexSet{});
  for (const auto& [name, clique_vertices] : inverse) {
    const int v = h.find_label(name);
    if (v < 0) throw std::logic_error("witness refers to unknown vertex " + name);
    for (int i : clique_vertices) e.images[static_cast<std::size_t>(i - 1)].insert(v);
  }
  return e;
}

std::vector<int> span_of(int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

std::vector<int> join(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

Hypergraph cycle(int length) {
  require(length >= 3, "cycle needs length >= 3");
  std::vector<VertexSet> edges;
  for (int i = 0; i < length; ++i) edges.push_back(VertexSet{i, (i + 1) % length});
  return Hypergraph(length, std::move(edges), numbered("x", length));
}

Hypergraph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1 && m + n <= kMaxVertices, "complete_bipartite needs m, n >= 1");
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.push_back(VertexSet{i, m + j});
  }
  auto labels = numbered("x", m);
  for (auto& y : numbered("y", n)) labels.push_back(y);
  return Hypergraph(m + n, std::move(edges), std::move(labels));
}

Hypergraph hyperclique(int l, int k) {
  require(1 < k && k <= l && l <= kMaxVertices, "hyperclique needs 1 < k <= l");
  std::vector<VertexSet> edges;
  // k-subsets in lexicographic order of their sorted member lists.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    VertexSet e;
    for (int v : pick) e.insert(v);
    edges.push_back(e);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == l - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return Hypergraph(l, std::move(edges), numbered("x", l));
}

Hypergraph almost_clique(int l, int k) {
  require(l <= kMaxVertices && 1 <= k && k < l - 1, "almost_clique needs 1 <= k < l - 1");
  std::vector<VertexSet> edges;
  for (int u = 0; u < l; ++u) {
    for (int v = u + 1; v < l; ++v) {
      if (u == 0 && v > k) continue;
      edges.push_back(VertexSet{u, v});
    }
  }
  return Hypergraph(l, std::move(edges), numbered("x", l));
}

Hypergraph boat() {
  const int pairs[][2] = {{1, 2}, {1, 4}, {1, 6}, {2, 3}, {4, 5}, {6, 7}, {3, 8}, {5, 8}, {7, 8}};
  std::vector<VertexSet> edges;
  for (const auto& p : pairs) edges.push_back(VertexSet{p[0] - 1, p[1] - 1});
  return Hypergraph(8, std::move(edges), numbered("x", 8));
}

Hypergraph hyper_boat() {
  std::vector<VertexSet> edges = {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}, VertexSet{0, 3}, VertexSet{1, 4},
                                  VertexSet{2, 5}};
  return Hypergraph(6, std::move(edges), {"y1", "y2", "y3", "z1", "z2", "z3"});
}

Hypergraph path(int length) {
  require(length >= 2 && length <= kMaxVertices, "path needs 2..24 vertices");
  std::vector<VertexSet> edges;
  for (int i = 0; i + 1 < length; ++i) edges.push_back(VertexSet{i, i + 1});
  return Hypergraph(length, std::move(edges), numbered("x", length));
}

Hypergraph star(int leaves) {
  require(leaves >= 1 && leaves < kMaxVertices, "star needs 1..23 leaves");
  std::vector<VertexSet> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back(VertexSet{0, i});
  std::vector<std::string> labels = {"c"};
  for (auto& x : numbered("x", leaves)) labels.push_back(x);
  return Hypergraph(leaves + 1, std::move(edges), std::move(labels));
}

Hypergraph single_edge(int size) {
  require(size >= 1 && size <= kMaxVertices, "edge needs 1..24 vertices");
  return Hypergraph(size, {VertexSet::full(size)}, numbered("x", size));
}

Hypergraph pyramid() {
  std::vector<VertexSet> edges = {VertexSet{0, 1, 2}, VertexSet{0, 3}, VertexSet{1, 3}, VertexSet{2, 3}};
  return Hypergraph(4, std::move(edges), {"x1", "x2", "x3", "y"});
}

namespace {

void arity(std::string_view name, std::span<const int> params, std::size_t expected) {
  if (params.size() != expected) {
    throw InputError(std::string(name) + " takes " + std::to_string(expected) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

}  // namespace

Hypergraph by_name(std::string_view name, std::span<const int> p) {
  if (name == "cycle") return arity(name, p, 1), cycle(p[0]);
  if (name == "complete_bipartite") return arity(name, p, 2), complete_bipartite(p[0], p[1]);
  if (name == "hyperclique") return arity(name, p, 2), hyperclique(p[0], p[1]);
  if (name == "almost_clique") return arity(name, p, 2), almost_clique(p[0], p[1]);
  if (name == "boat") return arity(name, p, 0), boat();
  if (name == "hyper_boat") return arity(name, p, 0), hyper_boat();
  if (name == "path") return arity(name, p, 1), path(p[0]);
  if (name == "star") return arity(name, p, 1), star(p[0]);
  if (name == "edge") return arity(name, p, 1), single_edge(p[0]);
  if (name == "pyramid") return arity(name, p, 0), pyramid();
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  return {"cycle", "complete_bipartite", "hyperclique", "almost_clique", "boat",
          "hyper_boat", "path", "star", "edge", "pyramid"};
}

namespace {

// Cycle vertex j receives the window of lambda - 1 consecutive clique
// vertices starting at j (cyclically). For even lengths the last cycle vertex
// repeats the window of its predecessor.
Witness cycle_witness(int l) {
  Witness w;
  w.h = cycle(l);
  const bool odd = l % 2 == 1;
  const int lambda = odd ? (l + 1) / 2 : l / 2;
  const int k = odd ? l : l - 1;
  std::map<std::string, std::vector<int>> inverse;
  for (int j = 1; j <= k; ++j) {
    auto& pre = inverse["x" + std::to_string(j)];
    for (int t = 0; t < lambda - 1; ++t) pre.push_back((j - 1 + t) % k + 1);
  }
  if (!odd) inverse["x" + std::to_string(l)] = inverse["x" + std::to_string(l - 1)];
  w.e = from_inverse(w.h, k, inverse);
  w.wed = lambda;
  return w;
}

Witness k2l_witness(int l) {
  Witness w;
  w.h = complete_bipartite(2, l);
  std::map<std::string, std::vector<int>> inverse;
  inverse["x1"] = span_of(1, l - 1);
  inverse["x2"] = span_of(l, 2 * l - 2);
  for (int i = 1; i < l; ++i) inverse["y" + std::to_string(i)] = {i, l + i - 1};
  inverse["y" + std::to_string(l)] = {2 * l - 1};
  w.e = from_inverse(w.h, 2 * l - 1, inverse);
  w.wed = l;
  return w;
}

Witness k33_witness() {
  Witness w;
  w.h = complete_bipartite(3, 3);
  w.e = from_inverse(w.h, 8,
                     {{"x1", {1, 3, 5}}, {"x2", {2, 4, 6}}, {"x3", {7, 8}}, {"y1", {1, 2}}, {"y2", {3, 4}},
                      {"y3", {5, 6}}});
  w.wed = 4;
  return w;
}

// The published drawing also lists clique vertex 16 under x8; with it the
// depth of edge {x7, x8} is 10. Dropping it keeps every image connected and
// pairwise touching and brings the depth down to 9.
Witness boat_witness() {
  Witness w;
  w.h = boat();
  w.e = from_inverse(w.h, 17,
                     {{"x1", join({{1}, span_of(6, 11), {16}})},
                      {"x2", join({{1, 2}, span_of(6, 8)})},
                      {"x3", join({{1, 2}, span_of(12, 15)})},
                      {"x4", span_of(5, 11)},
                      {"x5", span_of(3, 5)},
                      {"x6", join({span_of(9, 11), {16, 17}})},
                      {"x7", span_of(12, 17)},
                      {"x8", join({span_of(2, 4), span_of(12, 15), {17}})}});
  w.wed = 9;
  return w;
}

Witness hyper_boat_witness() {
  Witness w;
  w.h = hyper_boat();
  w.e = from_inverse(w.h, 7,
                     {{"y1", {1, 2, 3}}, {"y2", {2, 3}}, {"y3", {1, 4}}, {"z1", {7}}, {"z2", {5, 6}}, {"z3", {4, 5, 6}}});
  w.wed = 4;
  return w;
}

}  // namespace

Witness witness(std::string_view name, std::span<const int> p) {
  if (name == "cycle") {
    arity(name, p, 1);
    return cycle_witness(p[0]);
  }
  if (name == "complete_bipartite") {
    arity(name, p, 2);
    if (p[0] == 2 && p[1] >= 2) return k2l_witness(p[1]);
    if (p[0] == 3 && p[1] == 3) return k33_witness();
    throw InputError("no catalogued witness for complete_bipartite " + std::to_string(p[0]) + " " +
                     std::to_string(p[1]));
  }
  if (name == "almost_clique") {
    arity(name, p, 2);
    Witness w;
    w.h = almost_clique(p[0], p[1]);
    w.e.k = p[0] - 1;
    for (int i = 1; i < p[0]; ++i) w.e.images.push_back(VertexSet::single(i));
    w.wed = 2;
    return w;
  }
  if (name == "hyperclique") {
    arity(name, p, 2);
    Witness w;
    w.h = hyperclique(p[0], p[1]);
    w.e.k = p[0];
    for (int i = 0; i < p[0]; ++i) w.e.images.push_back(VertexSet::single(i));
    w.wed = p[1];
    return w;
  }
  if (name == "boat") return arity(name, p, 0), boat_witness();
  if (name == "hyper_boat") return arity(name, p, 0), hyper_boat_witness();
  if (name == "pyramid") {
    arity(name, p, 0);
    Witness w;
    w.h = pyramid();
    w.e = from_inverse(w.h, 5, {{"x1", {1}}, {"x2", {2}}, {"x3", {3}}, {"y", {4, 5}}});
    w.wed = 3;
    return w;
  }
  throw InputError("no catalogued witness named '" + std::string(name) + "'");
}

Embedding all_of_vertices(const Hypergraph& h, int k) {
  if (k < 1) throw InputError("clique size k must be >= 1");
  return Embedding{k, std::vector<VertexSet>(static_cast<std::size_t>(k), h.vertices())};
}

}  // namespace hgemb::families
