#include "embedding/subset_model.hpp"

#include "hgemb/kernels.hpp"

namespace hgemb::detail {

SubsetModel build_subset_model(const Hypergraph& h) {
  SubsetModel m;
  m.sets = connected_subsets(h);
  const std::size_t n = m.sets.size();
  std::vector<std::uint32_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = m.sets[i].bits();

  std::vector<std::uint8_t> flags(n);
  for (const VertexSet e : h.edges()) {
    kernels::intersect_flags(bits, e.bits(), flags);
    auto& list = m.meeting.emplace_back();
    for (std::size_t i = 0; i < n; ++i) {
      if (flags[i]) list.push_back(static_cast<std::uint32_t>(i));
    }
  }

  // S and T touch exactly when T meets the union of the edges meeting S.
  m.touch.assign(n, {});
  std::vector<bool> in_conflict(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    m.touch[i].resize(n);
    kernels::intersect_flags(bits, h.edge_closure(m.sets[i]).bits(), m.touch[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.touch[i][j]) continue;
      m.apart.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      in_conflict[i] = in_conflict[j] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (in_conflict[i]) m.conflicted.push_back(static_cast<std::uint32_t>(i));
  }
  return m;
}

}  // namespace hgemb::detail
