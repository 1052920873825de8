#pragma once

#include "graphcurv/graph.hpp"
#include "graphcurv/metrics.hpp"
#include "graphcurv/rational.hpp"

#include <cstddef>

namespace graphcurv {

/// Which vertex set carries the Lipschitz variables. The curvature of an
/// edge only depends on function values on B_1(x) u B_1(y): a function that
/// is 1-Lipschitz for the full-graph metric on that set extends 1-Lipschitz
/// to all of V, and the objective reads values there only. kFullVertexSet
/// exists to validate that reduction on small graphs.
enum class LpSupport { kBallUnion, kFullVertexSet };

/// Ollivier curvature of an edge: the exact minimum of Df(x) - Df(y) (D the
/// unnormalized graph Laplacian) over functions with f(x) = 0, f(y) = 1 that
/// are 1-Lipschitz with respect to the full-graph distance. Solved by the
/// exact simplex in lp.hpp; the result is deterministic and, on these
/// integer-data instances, always an integer.
Rational ollivier_curvature(const Graph& g, VertexId x, VertexId y, const DistanceData& dd,
                            LpSupport support = LpSupport::kBallUnion);
Rational ollivier_curvature(const Graph& g, VertexId x, VertexId y);

/// Exhaustive minimum over integer-valued 1-Lipschitz functions on the ball
/// union, independent of the simplex path. `available` is false when the
/// support exceeds the enumeration budget; the caller must not treat that as
/// a value.
struct OracleResult {
    bool available = false;
    Rational value;
};
OracleResult curvature_oracle(const Graph& g, VertexId x, VertexId y, const DistanceData& dd,
                              std::size_t support_budget = 18);

/// Per-edge curvature, parallel over edges with per-slot writes, so the
/// result is identical for every worker count.
EdgeMeasure curvature_all_edges(const Graph& g, const DistanceData& dd, unsigned threads = 0);

/// sum g(e) Ric(e) / sum g(e). Throws GraphError when the measures do not
/// match the graph's edge set.
Rational average_curvature_weighted(const Graph& g, const EdgeMeasure& g_measure,
                                    const EdgeMeasure& ric);

namespace detail {
/// Same program with the full ordered-pair constraint set, no implied-row
/// elimination. Only used by tests to pin the reduction's equivalence.
Rational lipschitz_optimum_unreduced(const Graph& g, VertexId x, VertexId y,
                                     const DistanceData& dd, LpSupport support);
}  // namespace detail

}  // namespace graphcurv
