#pragma once

// Named hypergraph families and catalogued witness embeddings.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgemb/embedding.hpp"
#include "hgemb/hypergraph.hpp"

namespace hgemb::families {

Hypergraph cycle(int length);                   // x1..xl, edges {xi, xi+1}
Hypergraph complete_bipartite(int m, int n);    // x1..xm, y1..yn
Hypergraph hyperclique(int l, int k);           // all k-subsets of x1..xl, 1 < k <= l
Hypergraph almost_clique(int l, int k);         // l-clique, x1 adjacent to x2..x{k+1} only
Hypergraph boat();                              // x1..x8
Hypergraph hyper_boat();                        // y1..y3, z1..z3
Hypergraph path(int length);                    // x1 - x2 - ... - xl
Hypergraph star(int leaves);                    // c joined to x1..xl
Hypergraph single_edge(int size);               // one edge {x1..xl}
Hypergraph pyramid();                           // {x1,x2,x3}, {xi,y}

// Names: cycle L | complete_bipartite M N | hyperclique L K | almost_clique L K |
// boat | hyper_boat | path L | star L | edge L | pyramid.
Hypergraph by_name(std::string_view name, std::span<const int> params);
std::vector<std::string> names();

struct Witness {
  Hypergraph h;
  Embedding e;
  int wed = 0;  // the weak edge depth the construction is known to reach
};

// Names: cycle L | complete_bipartite 2 L | complete_bipartite 3 3 |
// almost_clique L K | hyperclique L K | boat | hyper_boat | pyramid.
Witness witness(std::string_view name, std::span<const int> params);

// psi(i) = V(h) for every i.
Embedding all_of_vertices(const Hypergraph& h, int k);

}  // namespace hgemb::families
