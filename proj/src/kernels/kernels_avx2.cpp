// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace hgemb::kernels::avx2 {

namespace {

// Lane-wise count of sets that intersect each of the 8 probes in `probes`.
inline __m256i count_block(std::span<const std::uint32_t> sets, __m256i probes) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i disjoint = zero;
  for (const std::uint32_t s : sets) {
    const __m256i hit = _mm256_and_si256(probes, _mm256_set1_epi32(static_cast<int>(s)));
    // cmpeq yields -1 for disjoint lanes; subtracting counts them.
    disjoint = _mm256_sub_epi32(disjoint, _mm256_cmpeq_epi32(hit, zero));
  }
  const __m256i total = _mm256_set1_epi32(static_cast<int>(sets.size()));
  return _mm256_sub_epi32(total, disjoint);
}

}  // namespace

void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out) {
  std::size_t i = 0;
  for (; i + 8 <= probes.size(); i += 8) {
    const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(probes.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), count_block(sets, p));
  }
  scalar::count_intersecting(sets, probes.subspan(i), out.subspan(i));
}

void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out) {
  const __m256i step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::size_t i = 0;
  for (; i + 8 <= out.size(); i += 8) {
    const __m256i p =
        _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(first + static_cast<std::uint32_t>(i))), step);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), count_block(sets, p));
  }
  scalar::count_intersecting_range(sets, first + static_cast<std::uint32_t>(i), out.subspan(i));
}

void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out) {
  const __m256i p = _mm256_set1_epi32(static_cast<int>(probe));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= sets.size(); i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets.data() + i));
    const __m256i disjoint = _mm256_cmpeq_epi32(_mm256_and_si256(s, p), zero);
    const unsigned bits = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(disjoint))) & 0xffu;
    for (int lane = 0; lane < 8; ++lane) out[i + static_cast<std::size_t>(lane)] = (bits >> lane) & 1u;
  }
  scalar::intersect_flags(sets.subspan(i), probe, out.subspan(i));
}

}  // namespace hgemb::kernels::avx2
