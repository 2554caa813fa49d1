#pragma once

// JSON views of analysis results. Non-finite numbers are written as the
// strings "infinity" / "-infinity", and NaN as null.

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "hitting/bounds.hpp"
#include "hitting/exact.hpp"
#include "hitting/graph.hpp"

namespace hitting {

nlohmann::json json_number(double x);

nlohmann::json to_json(const BoundReport& report);

/// Mass captured, mean and a few quantiles of a truncated pmf.
nlohmann::json pmf_summary(const HittingStats& stats);

struct AnalyzeOptions {
  BoundOptions bounds;
  /// 0 picks default_pmf_horizon.
  std::size_t horizon = 0;
};

/// Expected hitting time, resistance, pmf summary, walk parameters over the
/// beta grid, and the bound report, for the contracted accessible graph.
nlohmann::json analyze(const WeightedGraph& g, const AnalyzeOptions& options = {});

}  // namespace hitting
