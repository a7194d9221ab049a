#pragma once

#include <stdexcept>
#include <string>

namespace hgemb {

// Malformed or out-of-range input: bad file syntax, vertex index outside the
// hypergraph, empty image, unknown family name.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured guard (enumeration budget, node limit, max vertex count) was
// exceeded before the computation could finish.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hgemb
