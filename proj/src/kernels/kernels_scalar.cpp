#include "hgemb/kernels.hpp"

namespace hgemb::kernels::scalar {

void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < probes.size(); ++i) {
    std::uint32_t c = 0;
    for (const std::uint32_t s : sets) c += (s & probes[i]) != 0;
    out[i] = c;
  }
}

void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t probe = first + static_cast<std::uint32_t>(i);
    std::uint32_t c = 0;
    for (const std::uint32_t s : sets) c += (s & probe) != 0;
    out[i] = c;
  }
}

void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < sets.size(); ++i) out[i] = (sets[i] & probe) != 0;
}

}  // namespace hgemb::kernels::scalar
