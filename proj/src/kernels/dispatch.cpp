#include <atomic>
#include <cstdlib>
#include <string>

#include "hgemb/errors.hpp"
#include "kernels_impl.hpp"

namespace hgemb::kernels {

namespace {

struct Table {
  void (*count)(std::span<const std::uint32_t>, std::span<const std::uint32_t>, std::span<std::uint32_t>);
  void (*count_range)(std::span<const std::uint32_t>, std::uint32_t, std::span<std::uint32_t>);
  void (*flags)(std::span<const std::uint32_t>, std::uint32_t, std::span<std::uint8_t>);
};

constexpr Table kScalar{scalar::count_intersecting, scalar::count_intersecting_range, scalar::intersect_flags};
#if HGEMB_HAVE_AVX2
constexpr Table kAvx2{avx2::count_intersecting, avx2::count_intersecting_range, avx2::intersect_flags};
#endif
#if HGEMB_HAVE_NEON
constexpr Table kNeon{neon::count_intersecting, neon::count_intersecting_range, neon::intersect_flags};
#endif

const Table* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &kScalar;
    case Backend::avx2:
#if HGEMB_HAVE_AVX2
      return &kAvx2;
#else
      return nullptr;
#endif
    case Backend::neon:
#if HGEMB_HAVE_NEON
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Backend detect() {
  if (const char* forced = std::getenv("HGEMB_KERNELS")) {
    const std::string name(forced);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (name == backend_name(b) && backend_supported(b)) return b;
    }
  }
  if (backend_supported(Backend::avx2)) return Backend::avx2;
  if (backend_supported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

struct State {
  std::atomic<Backend> backend{detect()};
};

State& state() {
  static State s;
  return s;
}

const Table& active() { return *table_for(state().backend.load(std::memory_order_relaxed)); }

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if HGEMB_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
      return HGEMB_HAVE_NEON != 0;
  }
  return false;
}

Backend active_backend() { return state().backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw InputError("kernel backend '" + std::string(backend_name(b)) + "' not supported here");
  }
  state().backend.store(b, std::memory_order_relaxed);
}

void count_intersecting(std::span<const std::uint32_t> sets, std::span<const std::uint32_t> probes,
                        std::span<std::uint32_t> out) {
  active().count(sets, probes, out);
}

void count_intersecting_range(std::span<const std::uint32_t> sets, std::uint32_t first,
                              std::span<std::uint32_t> out) {
  active().count_range(sets, first, out);
}

void intersect_flags(std::span<const std::uint32_t> sets, std::uint32_t probe, std::span<std::uint8_t> out) {
  active().flags(sets, probe, out);
}

}  // namespace hgemb::kernels
