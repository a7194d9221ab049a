#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hgemb {

inline constexpr int kMaxVertices = 24;

// A finite set of vertex indices stored as a bitmask over 0..kMaxVertices-1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr VertexSet single(int v) { return VertexSet(1u << v); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= 1u << v; }
  constexpr void erase(int v) { bits_ &= ~(1u << v); }

  std::vector<int> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  // Order used everywhere a deterministic set order is needed: cardinality,
  // then numeric mask value.
  friend constexpr bool canonical_less(VertexSet a, VertexSet b) {
    const int sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a.bits_ < b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Calls fn(v) for each member of s in increasing order.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1) fn(std::countr_zero(b));
}

// Immutable hypergraph on vertices 0..n-1. Construction enforces: every edge
// nonempty and in range, no duplicate edges, every vertex in some edge.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<VertexSet> edges, std::vector<std::string> labels = {});

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet edge(std::size_t i) const { return edges_[i]; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of the vertex with the given label, or -1.
  int find_label(std::string_view name) const;

  // Vertices sharing some edge with v (v excluded).
  VertexSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  // Union of all edges that meet s.
  VertexSet edge_closure(VertexSet s) const;

  bool is_graph() const;
  std::string describe(VertexSet s) const;

  // Throws InputError when s has members outside 0..n-1.
  void check_in_range(VertexSet s) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::string> labels_;
  std::vector<VertexSet> adjacency_;
};

// True iff s is nonempty and the subhypergraph induced by s is connected
// (u, v in s adjacent when some edge contains both).
bool is_connected(const Hypergraph& h, VertexSet s);

// s and t intersect, or some hyperedge meets both.
bool touches(const Hypergraph& h, VertexSet s, VertexSet t);

// All nonempty connected subsets, ordered by cardinality then mask value.
std::vector<VertexSet> connected_subsets(const Hypergraph& h);

// Graph on the same vertices with {u,v} an edge iff some hyperedge holds both.
Hypergraph clique_graph(const Hypergraph& h);

// Connected components of h as vertex sets, ordered by lowest vertex.
std::vector<VertexSet> connected_components(const Hypergraph& h);

// Subhypergraph induced by a union of components (edges inside `keep`),
// reindexed densely; labels preserved.
Hypergraph restrict_to(const Hypergraph& h, VertexSet keep);

// Text format:
//   vertices: x1 x2 x3 y
//   edge: x1 x2 x3
// one item per line, '#' starts a comment.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(const std::string& path);
std::string format_hypergraph(const Hypergraph& h);

}  // namespace hgemb
