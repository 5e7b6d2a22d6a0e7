#pragma once

#include "recolor/graph.hpp"

namespace recolor {

// Exhaustive ground truth for small graphs. Both refuse graphs with more than
// kOracleMaxVertices vertices (std::invalid_argument).
inline constexpr int kOracleMaxVertices = 30;

bool is_k_colorable(const Graph& g, int k);
int exact_chromatic_number(const Graph& g);

}  // namespace recolor
