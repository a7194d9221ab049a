#include <doctest.h>

#include <random>
#include <vector>

#include "hgemb/errors.hpp"
#include "hgemb/kernels.hpp"

using namespace hgemb::kernels;

namespace {

std::vector<std::uint32_t> random_masks(std::mt19937& rng, std::size_t n, int bits) {
  std::uniform_int_distribution<std::uint32_t> d(0, (1u << bits) - 1u);
  std::vector<std::uint32_t> out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

std::vector<Backend> supported() {
  std::vector<Backend> out;
  for (auto b : {Backend::scalar, Backend::avx2, Backend::neon}) {
    if (backend_supported(b)) out.push_back(b);
  }
  return out;
}

// Restores the startup backend when a test case ends.
struct BackendGuard {
  Backend saved = active_backend();
  ~BackendGuard() { set_backend(saved); }
};

}  // namespace

TEST_CASE("every supported backend matches the plain loop") {
  BackendGuard guard;
  std::mt19937 rng(3);
  // Lengths straddle the vector widths so tails get exercised.
  for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u, 257u}) {
    const auto sets = random_masks(rng, n, 12);
    const auto probes = random_masks(rng, 37, 12);

    std::vector<std::uint32_t> ref_counts(probes.size());
    scalar::count_intersecting(sets, probes, ref_counts);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      std::uint32_t direct = 0;
      for (auto s : sets) direct += (s & probes[i]) ? 1 : 0;
      REQUIRE(ref_counts[i] == direct);
    }
    std::vector<std::uint32_t> ref_range(50);
    scalar::count_intersecting_range(sets, 1000, ref_range);
    std::vector<std::uint8_t> ref_flags(n);
    scalar::intersect_flags(sets, probes[0], ref_flags);

    for (auto b : supported()) {
      CAPTURE(backend_name(b));
      CAPTURE(n);
      set_backend(b);
      std::vector<std::uint32_t> counts(probes.size());
      count_intersecting(sets, probes, counts);
      CHECK(counts == ref_counts);
      std::vector<std::uint32_t> range(50);
      count_intersecting_range(sets, 1000, range);
      CHECK(range == ref_range);
      std::vector<std::uint8_t> flags(n);
      intersect_flags(sets, probes[0], flags);
      CHECK(flags == ref_flags);
    }
  }
}

TEST_CASE("backend selection") {
  BackendGuard guard;
  CHECK(backend_supported(Backend::scalar));
  CHECK(backend_supported(active_backend()));
  set_backend(Backend::scalar);
  CHECK(active_backend() == Backend::scalar);
  for (auto b : {Backend::avx2, Backend::neon}) {
    if (!backend_supported(b)) CHECK_THROWS_AS(set_backend(b), hgemb::InputError);
  }
  CHECK(backend_name(Backend::avx2) == "avx2");
}
