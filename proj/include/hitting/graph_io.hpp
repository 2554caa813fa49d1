#pragma once

// Text format for weighted graphs:
//
//   {
//     "vertices": ["0", "1", "2"],
//     "edges": [
//       ["0", "1", 1],
//       ["1", "2", 2.5]
//     ],
//     "origin": "0",
//     "targets": ["2"],
//     "metadata": {"generator": "unit_path", "n": 2}
//   }
//
// Labels may be given as JSON strings or integers. Weights are decimal
// floating point; zero-weight edges are dropped and negative weights are
// rejected. An unordered pair may be listed twice only with equal weights.

#include <filesystem>
#include <string>
#include <string_view>

#include "hitting/graph.hpp"

namespace hitting {

WeightedGraph parse_graph(std::string_view text);

/// Canonical text form: labels in canonical order, one edge per line,
/// weights with 17 significant digits.
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph read_graph_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

/// `%.17g`, the shortest fixed-width form that round-trips every double.
std::string format_double(double value);

}  // namespace hitting
