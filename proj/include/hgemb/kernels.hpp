#pragma once

// Bulk bitmask intersection kernels. Every entry point has a scalar
// reference implementation and vector variants (AVX2 on x86-64, NEON on
// AArch64); the variant is picked once at startup from the running CPU and
// can be pinned with set_backend() or HGEMB_KERNELS=scalar|avx2|neon.

#include <cstdint>
#include <span>
#include <string_view>

namespace hgemb::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
// Throws InputError when b is not supported on this CPU/build.
void set_backend(Backend b);

// out[i] = number of s in sets with (s & probes[i]) != 0.
void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out);

// Same with the consecutive probes first, first+1, ..., first+out.size()-1.
// This is the shape of a table over all subsets of a small ground set.
void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out);

// out[i] = 1 if (sets[i] & probe) != 0 else 0.
void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out);

namespace scalar {
void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out);
void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out);
void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out);
}  // namespace scalar

}  // namespace hgemb::kernels
