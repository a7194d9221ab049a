#pragma once

#include "hgemb/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define HGEMB_HAVE_AVX2 1
#else
#define HGEMB_HAVE_AVX2 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define HGEMB_HAVE_NEON 1
#else
#define HGEMB_HAVE_NEON 0
#endif

namespace hgemb::kernels {

#if HGEMB_HAVE_AVX2
namespace avx2 {
void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out);
void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out);
void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out);
}  // namespace avx2
#endif

#if HGEMB_HAVE_NEON
namespace neon {
void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out);
void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out);
void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out);
}  // namespace neon
#endif

}  // namespace hgemb::kernels
