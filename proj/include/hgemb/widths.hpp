#pragma once

// Tree decompositions, chordality, fractional hypertree width and explicit
// set functions used as width lower-bound certificates.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgemb/embedding.hpp"
#include "hgemb/hypergraph.hpp"
#include "hgemb/rational.hpp"

namespace hgemb {

using BagSet = std::vector<VertexSet>;

struct TreeDecomposition {
  std::vector<int> parent;  // -1 for the root
  std::vector<VertexSet> bags;
};

// Empty when td covers every hyperedge and every vertex's bags form a
// nonempty connected subtree; otherwise one message per violation.
std::vector<std::string> check_tree_decomposition(const Hypergraph& h, const TreeDecomposition& td);

// GYO reduction: drop vertices that lie in a single edge and edges contained
// in another until nothing changes.
bool is_acyclic(const Hypergraph& h);

// Chordality of the clique graph (maximum cardinality search, then a
// perfect-elimination check).
bool is_chordal(const Hypergraph& h);

inline constexpr int kMaxTriangulationVertices = 9;

// Inclusion-minimal chordal fill-ins of a graph (binary edges only). Each
// fill set is a list of 2-vertex sets; the list is ordered by fill size,
// then lexicographically. Throws ResourceError above max_n vertices.
std::vector<std::vector<VertexSet>> minimal_triangulations(const Hypergraph& g,
                                                           int max_n = kMaxTriangulationVertices);

// Maximal-clique bag sets of the minimal triangulations of the clique graph.
std::vector<BagSet> proper_tree_decompositions(const Hypergraph& h, int max_n = kMaxTriangulationVertices);

// Clique tree over the bags of a proper decomposition (maximum-intersection
// spanning tree, rooted at bag 0).
TreeDecomposition clique_tree(const BagSet& bags);

// Minimum total weight on hyperedges covering every vertex of s at least
// once. Throws InputError for empty s or an uncoverable vertex.
Rational fractional_edge_cover(const Hypergraph& h, VertexSet s);

Rational fhw(const Hypergraph& h, int max_n = kMaxTriangulationVertices);

// A function on all subsets of 0..n-1, indexed by bitmask.
class SetFunction {
 public:
  SetFunction() = default;
  explicit SetFunction(int n);

  int num_vertices() const { return n_; }
  const Rational& operator()(VertexSet s) const { return values_[s.bits()]; }
  Rational& operator[](VertexSet s) { return values_[s.bits()]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

// mu(S) = |{i : psi(i) meets S}| / wed(psi). Throws InputError when e is
// not a valid embedding of h.
SetFunction coverage_function(const Hypergraph& h, const Embedding& e);

struct SetFunctionCertificate {
  bool zero_at_empty = false;
  bool monotone = false;
  bool submodular = false;
  bool edge_dominated = false;
  // Witnesses for failures: (S, S + v) for monotonicity, (S + u, S + v) for
  // submodularity, (e, e) for edge domination.
  std::optional<std::pair<VertexSet, VertexSet>> monotone_violation;
  std::optional<std::pair<VertexSet, VertexSet>> submodular_violation;
  std::optional<std::pair<VertexSet, VertexSet>> edge_violation;

  bool all() const { return zero_at_empty && monotone && submodular && edge_dominated; }
};

SetFunctionCertificate certify_set_function(const Hypergraph& h, const SetFunction& f);

// min over proper bag sets of max f(bag). Throws InputError unless f passes
// certify_set_function, since only then is the value a width lower bound.
Rational width_lower_bound(const Hypergraph& h, const SetFunction& f, int max_n = kMaxTriangulationVertices);

// True iff every proper bag set has a bag meeting all images of e.
bool common_bag_check(const Hypergraph& h, const Embedding& e, int max_n = kMaxTriangulationVertices);

// Edge-dominated submodular function on the hyper-boat (vertex order
// y1 y2 y3 z1 z2 z3) whose width over proper decompositions is 2. Values
// depend only on how many y's and z's a set holds.
SetFunction hyper_boat_width_function();

// Text format, one line per subset:
//   value y1 z2 : 3/2
//   value - : 0
// '-' names the empty set. Every subset must appear exactly once.
SetFunction parse_set_function(const Hypergraph& h, std::string_view text);
SetFunction read_set_function(const Hypergraph& h, const std::string& path);
std::string format_set_function(const Hypergraph& h, const SetFunction& f);

}  // namespace hgemb
