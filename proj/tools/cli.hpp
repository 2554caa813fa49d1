#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hitting/graph.hpp"

namespace hitting::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kValidationFailure = 1, kViolation = 2 };

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view data);

/// The same graph with origin and (single) target exchanged.
WeightedGraph swap_endpoints(const WeightedGraph& g);

struct CorpusCheckOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_vertices = 12;
  std::size_t min_distance = 3;
  std::vector<double> flow_betas{0.3, 0.7};
};

/// Bounds, flow laws, decomposition and commute identity over a random
/// corpus. The result carries "violations" (an integer) and per-check
/// maxima.
nlohmann::json corpus_check(const CorpusCheckOptions& options);

}  // namespace hitting::cli
