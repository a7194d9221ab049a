#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hgemb/hypergraph.hpp"

namespace hgemb::detail {

// Connected subsets of a hypergraph together with the incidence data the
// embedding programs need.
struct SubsetModel {
  std::vector<VertexSet> sets;                            // canonical order
  std::vector<std::vector<std::uint32_t>> meeting;        // per edge: indices of sets meeting it
  std::vector<std::vector<std::uint8_t>> touch;           // touch[i][j]
  std::vector<std::pair<std::uint32_t, std::uint32_t>> apart;  // non-touching pairs i < j
  std::vector<std::uint32_t> conflicted;                  // sets in some non-touching pair
};

SubsetModel build_subset_model(const Hypergraph& h);

}  // namespace hgemb::detail
