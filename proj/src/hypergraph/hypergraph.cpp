#include "hgemb/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "common/text.hpp"
#include "hgemb/errors.hpp"

namespace hgemb {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_vertex(*this, [&](int v) { out.push_back(v); });
  return out;
}

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  if (labels_.empty()) {
    for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels_.size()) != n) throw InputError("label count does not match vertex count");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty vertex label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw InputError("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  VertexSet covered;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const VertexSet e = edges_[i];
    if (e.empty()) throw InputError("edge " + std::to_string(i) + " is empty");
    check_in_range(e);
    for (std::size_t j = 0; j < i; ++j) {
      if (edges_[j] == e) throw InputError("duplicate edge " + describe(e));
    }
    covered |= e;
  }
  if (covered != vertices()) {
    throw InputError("vertices " + describe(vertices() - covered) + " appear in no edge");
  }
  adjacency_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (const VertexSet e : edges_) {
    for_each_vertex(e, [&](int v) { adjacency_[static_cast<std::size_t>(v)] |= e; });
  }
  for (int v = 0; v < n; ++v) adjacency_[static_cast<std::size_t>(v)].erase(v);
}

int Hypergraph::find_label(std::string_view name) const {
  for (int v = 0; v < n_; ++v) {
    if (labels_[static_cast<std::size_t>(v)] == name) return v;
  }
  return -1;
}

VertexSet Hypergraph::edge_closure(VertexSet s) const {
  VertexSet out;
  for (const VertexSet e : edges_) {
    if (e.intersects(s)) out |= e;
  }
  return out;
}

bool Hypergraph::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 2; });
}

std::string Hypergraph::describe(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for_each_vertex(s, [&](int v) {
    if (!first) out += ',';
    first = false;
    out += v < n_ && static_cast<std::size_t>(v) < labels_.size() ? labels_[static_cast<std::size_t>(v)]
                                                                  : std::to_string(v);
  });
  return out + "}";
}

void Hypergraph::check_in_range(VertexSet s) const {
  if (!s.subset_of(vertices())) {
    throw InputError("vertex index out of range (n = " + std::to_string(n_) + ")");
  }
}

bool is_connected(const Hypergraph& h, VertexSet s) {
  h.check_in_range(s);
  if (s.empty()) return false;
  VertexSet reached = VertexSet::single(s.lowest());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for_each_vertex(frontier, [&](int v) { next |= h.neighbors(v); });
    next = (next & s) - reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

bool touches(const Hypergraph& h, VertexSet s, VertexSet t) {
  if (s.empty() || t.empty()) throw InputError("touches: empty vertex set");
  h.check_in_range(s);
  h.check_in_range(t);
  if (s.intersects(t)) return true;
  for (const VertexSet e : h.edges()) {
    if (e.intersects(s) && e.intersects(t)) return true;
  }
  return false;
}

std::vector<VertexSet> connected_subsets(const Hypergraph& h) {
  const std::uint32_t limit = h.vertices().bits();
  std::vector<VertexSet> out;
  for (std::uint32_t m = 1; m != 0 && m <= limit; ++m) {
    if (is_connected(h, VertexSet(m))) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
  return out;
}

Hypergraph clique_graph(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  for (int u = 0; u < h.num_vertices(); ++u) {
    for_each_vertex(h.neighbors(u), [&](int v) {
      if (u < v) edges.push_back(VertexSet{u, v});
    });
  }
  return Hypergraph(h.num_vertices(), std::move(edges), h.labels());
}

std::vector<VertexSet> connected_components(const Hypergraph& h) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for_each_vertex(frontier, [&](int u) { next |= h.neighbors(u); });
      next = next - comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

Hypergraph restrict_to(const Hypergraph& h, VertexSet keep) {
  std::vector<int> index(static_cast<std::size_t>(h.num_vertices()), -1);
  std::vector<std::string> labels;
  int next = 0;
  for_each_vertex(keep, [&](int v) {
    index[static_cast<std::size_t>(v)] = next++;
    labels.push_back(h.label(v));
  });
  std::vector<VertexSet> edges;
  for (const VertexSet e : h.edges()) {
    if (!e.subset_of(keep)) continue;
    VertexSet mapped;
    for_each_vertex(e, [&](int v) { mapped.insert(index[static_cast<std::size_t>(v)]); });
    edges.push_back(mapped);
  }
  return Hypergraph(next, std::move(edges), std::move(labels));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<VertexSet> edges;
  bool have_vertices = false;
  for (const auto& line : text::logical_lines(text)) {
    std::string_view key, rest;
    if (!text::split_key(line.content, key, rest)) text::fail(line.number, "expected 'key: values'");
    const auto tokens = text::split_ws(rest);
    if (key == "vertices") {
      if (have_vertices) text::fail(line.number, "duplicate 'vertices' line");
      have_vertices = true;
      for (auto t : tokens) {
        for (const auto& l : labels) {
          if (l == t) text::fail(line.number, "duplicate vertex name '" + std::string(t) + "'");
        }
        labels.emplace_back(t);
      }
      if (static_cast<int>(labels.size()) > kMaxVertices) text::fail(line.number, "too many vertices");
    } else if (key == "edge") {
      if (!have_vertices) text::fail(line.number, "'edge' before 'vertices'");
      if (tokens.empty()) text::fail(line.number, "empty edge");
      VertexSet e;
      for (auto t : tokens) {
        const auto it = std::find(labels.begin(), labels.end(), t);
        if (it == labels.end()) text::fail(line.number, "unknown vertex '" + std::string(t) + "'");
        e.insert(static_cast<int>(it - labels.begin()));
      }
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
        text::fail(line.number, "duplicate edge");
      }
      edges.push_back(e);
    } else {
      text::fail(line.number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_vertices) throw InputError("missing 'vertices' line");
  const int n = static_cast<int>(labels.size());
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Hypergraph read_hypergraph(const std::string& path) { return parse_hypergraph(text::read_file(path)); }

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& l : h.labels()) out << ' ' << l;
  out << '\n';
  for (const VertexSet e : h.edges()) {
    out << "edge:";
    for_each_vertex(e, [&](int v) { out << ' ' << h.label(v); });
    out << '\n';
  }
  return out.str();
}

}  // namespace hgemb
