#pragma once

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

#include <vector>

namespace graphcurv {

/// All-pairs shortest-path distances and geodesic counts, exact. Counts are
/// arbitrary-precision: they grow with the number of bit-flip orderings on
/// product-like graphs.
struct DistanceData {
    VertexId n = 0;
    std::vector<int> dist;      // row-major n x n
    std::vector<BigInt> sigma;  // geodesic counts, row-major n x n

    int distance(VertexId a, VertexId b) const { return dist[static_cast<std::size_t>(a) * n + b]; }
    const BigInt& geodesic_count(VertexId a, VertexId b) const {
        return sigma[static_cast<std::size_t>(a) * n + b];
    }
    int diameter() const;
};

/// BFS from every source. Throws GraphError on a disconnected input, naming
/// two unreachable vertices.
DistanceData all_pairs(const Graph& g);

/// Mean of d(x, y) over all ordered pairs, diagonal included.
Rational average_distance(const Graph& g, const DistanceData& dd);
Rational average_distance(const Graph& g);

/// 2|E| / |V|, exact.
Rational average_degree(const Graph& g);

/// One exact value per canonical edge, aligned with Graph::edges().
struct EdgeMeasure {
    std::vector<Rational> values;

    const Rational& at(const Graph& g, VertexId a, VertexId b) const {
        return values[g.edge_index(a, b)];
    }
    Rational total() const;
};

/// Probability that a uniformly random geodesic between two uniformly random
/// (ordered) vertices traverses the edge. Computed per source with exact
/// rational accumulation; the merge order cannot change the result, so any
/// worker count yields identical values.
EdgeMeasure edge_betweenness(const Graph& g, unsigned threads = 0);

/// Floating-point variant for graphs too large for exact arithmetic. Never
/// used by the exact analysis pipeline.
std::vector<double> edge_betweenness_approx(const Graph& g);

/// CSV rows "u,v,numerator,denominator" with a header line.
std::string edge_measure_csv(const Graph& g, const EdgeMeasure& m);

}  // namespace graphcurv
