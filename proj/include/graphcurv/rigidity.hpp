#pragma once

#include "graphcurv/graph.hpp"
#include "graphcurv/metrics.hpp"
#include "graphcurv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphcurv {

/// For an edge (x, y): the vertices strictly closer to x, strictly closer
/// to y, and equidistant. Always a partition of V, and every vertex differs
/// by at most 1 in the two distances.
struct SeparationSets {
    std::vector<VertexId> side_x;
    std::vector<VertexId> side_y;
    std::vector<VertexId> middle;
};

SeparationSets separation_sets(const Graph& g, VertexId x, VertexId y, const DistanceData& dd);

/// An involutive automorphism swapping x and y, fixing the equidistant set
/// pointwise, whose pairing on the two sides is exactly the cut edge set.
struct Reflection {
    VertexId x = 0;
    VertexId y = 0;
    std::vector<VertexId> phi;  // permutation of all of V
};

struct ReflectionOutcome {
    std::optional<Reflection> reflection;
    std::string failure;  // non-empty iff no reflection exists for this edge
};

/// Builds the only map that can possibly be a reflection and verifies each
/// required property independently. Failure is a value (with its reason),
/// never an exception.
ReflectionOutcome candidate_reflection(const Graph& g, VertexId x, VertexId y,
                                       const DistanceData& dd);

struct EdgeReflectivity {
    Edge edge;
    bool ok = false;
    std::string failure;
    std::vector<VertexId> phi;  // empty unless ok
};

struct ReflectivityReport {
    bool reflective = false;
    std::vector<EdgeReflectivity> per_edge;  // aligned with Graph::edges()
};

ReflectivityReport is_reflective(const Graph& g, const DistanceData& dd, unsigned threads = 0);

struct SharpnessViolation {
    VertexId z = 0;
    VertexId x = 0;
    VertexId y = 0;
    long long laplacian_difference = 0;  // Dd(z,.)(x) - Dd(z,.)(y)
    Rational ric;
};

struct SharpnessReport {
    bool sharp = false;
    std::optional<SharpnessViolation> violation;  // first one found, scan order fixed
};

/// Whenever d(z, x) < d(z, y) for an edge (x, y), the distance function
/// from z must realize the curvature: Dd(z,.)(x) - Dd(z,.)(y) = Ric(x, y).
/// Equivalent to equality in the average-distance bound.
SharpnessReport check_sharpness(const Graph& g, const DistanceData& dd, const EdgeMeasure& ric);

struct MatchingCensus {
    std::vector<VertexId> only_x;  // B_1(x) \ B_1(y), closed balls
    std::vector<VertexId> only_y;
    std::size_t matching_size = 0;
    bool perfect_matching = false;
    bool degrees_equal = false;
    std::size_t common_ball = 0;  // |B_1(x) n B_1(y)|
    Rational ric;
    bool ric_equals_common_ball = false;
};

/// Local structure around an edge: maximum matching between the two ball
/// differences using cross edges only, plus the two scalar identities that
/// hold at equality graphs.
MatchingCensus matching_census(const Graph& g, VertexId x, VertexId y, const DistanceData& dd);

/// (x, y) and (x2, y2) are parallel when both separation sides coincide.
bool parallel_check(const Graph& g, VertexId x, VertexId y, VertexId x2, VertexId y2,
                    const DistanceData& dd);

/// All neighbors y2 of `from` with (x, y) parallel to (from, y2). Requires
/// `from` strictly closer to x. At equality graphs the list is a singleton;
/// that uniqueness is a verified property, not an assumption here.
std::vector<VertexId> parallel_neighbors(const Graph& g, VertexId x, VertexId y, VertexId from,
                                         const DistanceData& dd);

struct CrossCheckReport {
    bool ok = false;
    std::string detail;
};

/// At a sharp graph, the cut-matching reflection and the parallel-edge
/// transport define the same map; this verifies they agree on every edge and
/// side vertex.
CrossCheckReport cross_check_reflection_constructions(const Graph& g, const DistanceData& dd);

}  // namespace graphcurv
