#pragma once

#include "graphcurv/graph.hpp"

namespace graphcurv {

/// Backtracking isomorphism test with degree and distance-profile pruning.
/// A testing utility: refuses graphs above 30 vertices rather than growing
/// into canonical-labeling machinery.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace graphcurv
