#pragma once

// From k-clique over a semiring to a sum-of-products query shaped like a
// hypergraph, driven by a clique embedding into that hypergraph.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "hgemb/embedding.hpp"
#include "hgemb/engine.hpp"
#include "hgemb/hypergraph.hpp"

namespace hgemb::reduce {

enum class LiftMode {
  // v_i^j ~ v_p^q whenever v_i ~ v_p and j != q. Each k-clique of g shows
  // up k! times.
  full,
  // Only pairs with (i < p, j < q) or (i > p, j > q): the original vertices
  // of a clique fill the parts in increasing order, one copy per clique.
  canonical,
};

// Graph on n*k vertices; vertex j*n + i is copy j of original vertex i.
struct KPartiteGraph {
  int n = 0;
  int k = 0;
  engine::WeightedGraph graph;

  int vertex(int original, int part) const { return part * n + original; }
};

// Throws InputError for k < 2.
KPartiteGraph kpartite_lift(const engine::WeightedGraph& g, int k, LiftMode mode = LiftMode::full);

// Unordered clique-vertex pair (i < j, 0-based) -> hyperedge index.
using ThetaAssignment = std::map<std::pair<int, int>, std::size_t>;

// Lowest-index hyperedge meeting both images. Throws InputError when e is
// not a valid embedding of h.
ThetaAssignment assign_theta(const Hypergraph& h, const Embedding& e);

struct ReductionOutput {
  engine::SumProdInstance instance;
  ThetaAssignment theta;
  int n = 0;       // original vertices per part
  int k = 0;       // parts
  int lambda = 0;  // weak edge depth of the embedding
};

// The variable x ranges over tuples (a_i) indexed by the clique vertices
// mapped onto x, increasing i, packed in base n with the first entry most
// significant. Domains hold the values that occur in some table (a single
// 0 when nothing maps onto x or no table mentions it).
ReductionOutput build_instance(const Hypergraph& h, const Embedding& e, const KPartiteGraph& g,
                               const engine::Semiring& s);

// theta and the part layout, for audit next to the serialized instance.
std::string format_sidecar(const Hypergraph& h, const ReductionOutput& out);

struct RoundTrip {
  engine::Value lhs = 0;  // query value on the reduced instance
  engine::Value rhs = 0;  // k-clique value of g
  bool equal = false;
  std::size_t instance_size = 0;
};

// Builds the canonical lift of g, reduces, and evaluates both sides.
RoundTrip roundtrip_check(const Hypergraph& h, const Embedding& e, const engine::WeightedGraph& g,
                          const engine::Semiring& s);

}  // namespace hgemb::reduce
