#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgemb/embedding.hpp"
#include "hgemb/rational.hpp"

namespace hgemb::cli {

struct ReferenceRow {
  std::string label;
  std::string family;
  std::vector<int> params;
  Rational emb;   // expected
  Rational subw;  // expected
};

std::vector<ReferenceRow> reference_rows();

// Each writes a plain-text table to `text` and returns the same data as JSON.
// `ok` is cleared when a computed value disagrees with the expected one.
nlohmann::json repro_reference(std::ostream& text, const SolverOptions& options, int max_n, bool& ok);
nlohmann::json repro_boat(std::ostream& text, const SolverOptions& options, int max_n, bool& ok);
nlohmann::json repro_curve6(std::ostream& text, const SolverOptions& options, std::uint64_t budget, bool& ok);

}  // namespace hgemb::cli
