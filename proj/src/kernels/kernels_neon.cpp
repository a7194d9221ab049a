#include "kernels_impl.hpp"

#if HGEMB_HAVE_NEON
#include <arm_neon.h>

namespace hgemb::kernels::neon {

namespace {

inline uint32x4_t count_block(std::span<const std::uint32_t> sets, uint32x4_t probes) {
  uint32x4_t hits = vdupq_n_u32(0);
  // vtstq sets a lane to all-ones when (a & b) != 0.
  for (const std::uint32_t s : sets) hits = vsubq_u32(hits, vtstq_u32(probes, vdupq_n_u32(s)));
  return hits;
}

}  // namespace

void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out) {
  std::size_t i = 0;
  for (; i + 4 <= probes.size(); i += 4) vst1q_u32(out.data() + i, count_block(sets, vld1q_u32(probes.data() + i)));
  scalar::count_intersecting(sets, probes.subspan(i), out.subspan(i));
}

void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out) {
  const std::uint32_t step_values[4] = {0, 1, 2, 3};
  const uint32x4_t step = vld1q_u32(step_values);
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    const uint32x4_t p = vaddq_u32(vdupq_n_u32(first + static_cast<std::uint32_t>(i)), step);
    vst1q_u32(out.data() + i, count_block(sets, p));
  }
  scalar::count_intersecting_range(sets, first + static_cast<std::uint32_t>(i), out.subspan(i));
}

void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out) {
  const uint32x4_t p = vdupq_n_u32(probe);
  std::size_t i = 0;
  for (; i + 4 <= sets.size(); i += 4) {
    const uint32x4_t t = vtstq_u32(vld1q_u32(sets.data() + i), p);
    out[i] = vgetq_lane_u32(t, 0) & 1u;
    out[i + 1] = vgetq_lane_u32(t, 1) & 1u;
    out[i + 2] = vgetq_lane_u32(t, 2) & 1u;
    out[i + 3] = vgetq_lane_u32(t, 3) & 1u;
  }
  scalar::intersect_flags(sets.subspan(i), probe, out.subspan(i));
}

}  // namespace hgemb::kernels::neon

#endif
