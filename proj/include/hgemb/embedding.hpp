#pragma once

// Clique embeddings psi: C_k -> H and the measures built on them.
//
// Clique vertices are numbered 1..k in text and reports; internally
// images[i] is the image of clique vertex i+1.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgemb/hypergraph.hpp"
#include "hgemb/ratlp.hpp"

namespace hgemb {

struct Embedding {
  int k = 0;
  std::vector<VertexSet> images;
};

struct EmbeddingReport {
  bool valid = false;
  std::vector<std::string> violations;
  int wed = 0;
  int ed = 0;
  std::vector<int> vertex_depths;     // d(v): clique vertices whose image holds v
  std::vector<int> edge_weak_depths;  // d(e): clique vertices whose image meets e
  std::vector<int> edge_depths;       // d+(e): sum of d(v) over v in e
};

// Depths are computed whether or not the embedding is valid. Throws
// InputError for k = 0, a size mismatch, an empty image or an out-of-range
// vertex.
EmbeddingReport is_valid_embedding(const Hypergraph& h, const Embedding& e);

// Maximum number of images meeting any single hyperedge.
int weak_edge_depth(const Hypergraph& h, const Embedding& e);

struct WedResult {
  int wed = 0;
  Embedding witness;
};

struct BruteForceOptions {
  // Upper limit on C(N + k - 1, k), N = number of connected subsets.
  std::uint64_t budget = 10'000'000;
};

// Exhaustive search over multisets of k pairwise-touching connected subsets.
// Throws ResourceError when the candidate count exceeds the budget and
// InputError for k < 1.
WedResult min_wed_bruteforce(const Hypergraph& h, int k, const BruteForceOptions& options = {});

struct SolverOptions {
  lp::MilpOptions milp;
};

// Integer program over connected subsets: x_S counts clique vertices mapped
// to S, a binary y_S switches S off, and x_S + k*y_S <= k together with
// y_S + y_T >= 1 forbids using two non-touching sets at once.
WedResult min_wed_ilp(const Hypergraph& h, int k, const SolverOptions& options = {});

struct FractionalWitness {
  std::vector<std::pair<VertexSet, Rational>> weights;  // positive weights, canonical set order
  Rational w_star;
  Integer K;
  Rational emb;  // 1 / w_star
  // Set when h has several components; the reported values belong to
  // `component`, the one with the largest emb (ties: lowest vertex).
  bool disconnected = false;
  VertexSet component;
  std::size_t nodes = 0;  // branch-and-bound relaxations solved
};

// Mixed-integer program with the clique size normalised to 1.
FractionalWitness emb_fractional(const Hypergraph& h, const SolverOptions& options = {});

// The K-clique embedding that maps K * weight(S) clique vertices to each S.
Embedding embedding_from_weights(const FractionalWitness& w);

// (k, k / min_wed(h, k)) for k = 1..k_max.
std::vector<std::pair<int, Rational>> emb_k_curve(const Hypergraph& h, int k_max, const SolverOptions& options = {});

// Text format:
//   k: 5
//   map 1: x1
//   map 4: y z
// every clique vertex mapped exactly once.
Embedding parse_embedding(const Hypergraph& h, std::string_view text);
Embedding read_embedding(const Hypergraph& h, const std::string& path);
std::string format_embedding(const Hypergraph& h, const Embedding& e);

}  // namespace hgemb
