#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphcurv {

using VertexId = std::uint32_t;

/// Canonical undirected edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph, immutable after construction. Neighbor lists
/// are sorted ascending; the edge list is canonical and lexicographically
/// sorted, so two graphs compare equal iff they are the same labeled graph.
class Graph {
  public:
    Graph() = default;

    /// Validates and canonicalizes an edge list. Endpoints may arrive in
    /// either orientation. Self-loops, out-of-range endpoints and repeated
    /// edges (in any orientation) are errors, not silently merged.
    static Graph from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edge_list);

    VertexId num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    VertexId degree(VertexId v) const { return static_cast<VertexId>(adj_[v].size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(VertexId a, VertexId b) const;

    /// Position of the canonical edge in edges(). Throws GraphError if absent.
    std::size_t edge_index(VertexId a, VertexId b) const;

    bool is_connected() const;
    bool is_regular() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    VertexId n_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
};

/// Cartesian product: vertex (a, b) of g1 x g2 gets index a * n2 + b, edges
/// change one coordinate along an edge of that factor. The row-major index
/// makes the operation associative on the nose, not just up to isomorphism.
Graph cartesian_product(const Graph& g1, const Graph& g2);

Graph gen_complete(VertexId n);
Graph gen_cycle(VertexId n);
Graph gen_path(VertexId n);

/// Q_n: vertices are n-bit strings, adjacency is Hamming distance 1. n >= 1.
Graph gen_hypercube(unsigned n);

/// K_{n x 2}: the complete graph on 2n vertices minus the perfect matching
/// {(2i, 2i+1)}. Requires n >= 2; n = 1 would leave the two vertices
/// disconnected (use gen_complete(2) for the K_2 factor instead).
Graph gen_cocktail_party(unsigned n);

/// J(n, k): k-subsets of an n-set, adjacent when the intersection has k-1
/// elements. Requires 1 <= k <= n-1.
Graph gen_johnson(unsigned n, unsigned k);

/// Half of Q_n: even-weight n-bit strings, adjacent at Hamming distance 2.
/// Requires n >= 2.
Graph gen_halved_cube(unsigned n);

/// 27 vertices, 16-regular; built as the complement of the intersection
/// graph of the 27 lines (classes a_i, b_i, c_{ij}).
Graph gen_schlafli();

/// 56 vertices, 27-regular; 2-subsets of an 8-set in two signed copies.
Graph gen_gosset();

/// G(n, p) resampled until connected, deterministic for a fixed seed across
/// platforms. Throws GraphError once the resample budget is exhausted.
Graph gen_erdos_renyi_connected(VertexId n, double p, std::uint64_t seed,
                                unsigned max_resamples = 512);

/// Text format: first line "n m", then m lines "u v", 0-based indices.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace graphcurv
