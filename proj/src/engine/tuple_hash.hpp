#pragma once

#include <cstddef>
#include <functional>

#include "hgemb/engine.hpp"

namespace hgemb::engine {

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = t.size();
    for (auto x : t) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace hgemb::engine
