#include "graphcurv/rigidity.hpp"

#include "graphcurv/curvature.hpp"
#include "graphcurv/parallel.hpp"

#include <algorithm>

namespace graphcurv {

SeparationSets separation_sets(const Graph& g, VertexId x, VertexId y, const DistanceData& dd) {
    if (!g.has_edge(x, y)) {
        throw GraphError("separation_sets: (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") is not an edge");
    }
    SeparationSets sets;
    for (VertexId z = 0; z < g.num_vertices(); ++z) {
        const int dx = dd.distance(x, z);
        const int dy = dd.distance(y, z);
        if (dx < dy) {
            sets.side_x.push_back(z);
        } else if (dy < dx) {
            sets.side_y.push_back(z);
        } else {
            sets.middle.push_back(z);
        }
    }
    return sets;
}

ReflectionOutcome candidate_reflection(const Graph& g, VertexId x, VertexId y,
                                       const DistanceData& dd) {
    // Any reflection for (x, y) is already pinned down before we search:
    // the cut condition forces each side-x vertex onto its unique cut
    // neighbor (a vertex with zero or two cut neighbors rules every map
    // out), the fixed-point condition forces the equidistant set, and the
    // involution condition forces side y as the inverse pairing. So
    // verifying this one candidate decides existence for the edge.
    const SeparationSets sets = separation_sets(g, x, y, dd);
    const VertexId n = g.num_vertices();

    std::vector<char> on_side_x(n, 0);
    std::vector<char> on_side_y(n, 0);
    for (VertexId v : sets.side_x) {
        on_side_x[v] = 1;
    }
    for (VertexId v : sets.side_y) {
        on_side_y[v] = 1;
    }

    ReflectionOutcome out;
    std::vector<VertexId> phi(n);
    for (VertexId v = 0; v < n; ++v) {
        phi[v] = v;  // identity on the middle, overwritten on the sides
    }
    for (VertexId z : sets.side_x) {
        VertexId partner = n;
        unsigned cut_degree = 0;
        for (VertexId w : g.neighbors(z)) {
            if (on_side_y[w]) {
                ++cut_degree;
                partner = w;
            }
        }
        if (cut_degree != 1) {
            out.failure = "cut is not a perfect matching: vertex " + std::to_string(z) +
                          " on the x side has " + std::to_string(cut_degree) +
                          " neighbors on the y side";
            return out;
        }
        phi[z] = partner;
    }
    for (VertexId z : sets.side_y) {
        unsigned cut_degree = 0;
        for (VertexId w : g.neighbors(z)) {
            if (on_side_x[w]) {
                ++cut_degree;
            }
        }
        if (cut_degree != 1) {
            out.failure = "cut is not a perfect matching: vertex " + std::to_string(z) +
                          " on the y side has " + std::to_string(cut_degree) +
                          " neighbors on the x side";
            return out;
        }
    }
    for (VertexId z : sets.side_x) {
        phi[phi[z]] = z;
    }

    // The construction guarantees the properties below; they are verified
    // independently anyway so that a bug here cannot certify a reflection.
    if (phi[x] != y) {
        out.failure = "candidate does not map x to y";
        return out;
    }
    for (VertexId z : sets.middle) {
        if (phi[z] != z) {
            out.failure = "candidate moves equidistant vertex " + std::to_string(z);
            return out;
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (phi[phi[v]] != v) {
            out.failure = "candidate is not an involution at vertex " + std::to_string(v);
            return out;
        }
    }
    // Cut equals the matching graph: every cut edge pairs a side-x vertex
    // with its phi image (each side-x vertex has exactly one cut neighbor,
    // and that neighbor is phi of it by construction), so only the
    // automorphism property remains genuinely open.
    for (const Edge& e : g.edges()) {
        if (!g.has_edge(phi[e.u], phi[e.v])) {
            out.failure = "candidate is not an automorphism: edge (" + std::to_string(e.u) +
                          ", " + std::to_string(e.v) + ") maps to a non-edge";
            return out;
        }
    }
    out.reflection = Reflection{x, y, std::move(phi)};
    return out;
}

ReflectivityReport is_reflective(const Graph& g, const DistanceData& dd, unsigned threads) {
    ReflectivityReport report;
    report.per_edge.resize(g.num_edges());
    parallel_for(g.num_edges(), threads, [&](std::size_t i) {
        const Edge e = g.edges()[i];
        auto outcome = candidate_reflection(g, e.u, e.v, dd);
        EdgeReflectivity& entry = report.per_edge[i];
        entry.edge = e;
        if (outcome.reflection) {
            entry.ok = true;
            entry.phi = std::move(outcome.reflection->phi);
        } else {
            entry.ok = false;
            entry.failure = std::move(outcome.failure);
        }
    });
    report.reflective = std::all_of(report.per_edge.begin(), report.per_edge.end(),
                                    [](const EdgeReflectivity& e) { return e.ok; });
    return report;
}

namespace {

// Dd(z,.)(v) = sum over neighbors w of v of (d(z, w) - d(z, v)).
long long distance_laplacian(const Graph& g, const DistanceData& dd, VertexId z, VertexId v) {
    long long sum = 0;
    for (VertexId w : g.neighbors(v)) {
        sum += dd.distance(z, w) - dd.distance(z, v);
    }
    return sum;
}

}  // namespace

SharpnessReport check_sharpness(const Graph& g, const DistanceData& dd, const EdgeMeasure& ric) {
    if (ric.values.size() != g.num_edges()) {
        throw GraphError("check_sharpness: curvature measure does not match the edge set");
    }
    SharpnessReport report;
    for (VertexId z = 0; z < g.num_vertices(); ++z) {
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            const Edge e = g.edges()[i];
            VertexId x = e.u;
            VertexId y = e.v;
            if (dd.distance(z, x) == dd.distance(z, y)) {
                continue;
            }
            if (dd.distance(z, x) > dd.distance(z, y)) {
                std::swap(x, y);  // orient the edge away from z
            }
            const long long gap = distance_laplacian(g, dd, z, x) - distance_laplacian(g, dd, z, y);
            if (Rational(gap) != ric.values[i]) {
                report.sharp = false;
                report.violation = SharpnessViolation{z, x, y, gap, ric.values[i]};
                return report;
            }
        }
    }
    report.sharp = true;
    return report;
}

namespace {

// Kuhn's augmenting-path maximum matching on the cross edges between the
// two ball differences.
std::size_t maximum_cross_matching(const Graph& g, const std::vector<VertexId>& left,
                                   const std::vector<VertexId>& right) {
    std::vector<std::vector<std::size_t>> adj(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (g.has_edge(left[i], right[j])) {
                adj[i].push_back(j);
            }
        }
    }
    std::vector<std::size_t> match_right(right.size(), static_cast<std::size_t>(-1));
    std::vector<char> visited;
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (std::size_t j : adj[i]) {
            if (visited[j]) {
                continue;
            }
            visited[j] = 1;
            if (match_right[j] == static_cast<std::size_t>(-1) || self(self, match_right[j])) {
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };
    std::size_t size = 0;
    for (std::size_t i = 0; i < left.size(); ++i) {
        visited.assign(right.size(), 0);
        if (augment(augment, i)) {
            ++size;
        }
    }
    return size;
}

}  // namespace

MatchingCensus matching_census(const Graph& g, VertexId x, VertexId y, const DistanceData& dd) {
    if (!g.has_edge(x, y)) {
        throw GraphError("matching_census: (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") is not an edge");
    }
    std::vector<char> ball_x(g.num_vertices(), 0);
    std::vector<char> ball_y(g.num_vertices(), 0);
    ball_x[x] = 1;
    ball_y[y] = 1;
    for (VertexId w : g.neighbors(x)) {
        ball_x[w] = 1;
    }
    for (VertexId w : g.neighbors(y)) {
        ball_y[w] = 1;
    }
    MatchingCensus census;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (ball_x[v] && ball_y[v]) {
            ++census.common_ball;
        } else if (ball_x[v]) {
            census.only_x.push_back(v);
        } else if (ball_y[v]) {
            census.only_y.push_back(v);
        }
    }
    census.matching_size = maximum_cross_matching(g, census.only_x, census.only_y);
    census.perfect_matching = census.only_x.size() == census.only_y.size() &&
                              census.matching_size == census.only_x.size();
    census.degrees_equal = g.degree(x) == g.degree(y);
    census.ric = ollivier_curvature(g, x, y, dd);
    census.ric_equals_common_ball = census.ric == Rational(census.common_ball);
    return census;
}

namespace {

// Sorted side comparison for the parallel-edge relation.
bool sides_equal(const SeparationSets& a, const SeparationSets& b) {
    return a.side_x == b.side_x && a.side_y == b.side_y;
}

}  // namespace

bool parallel_check(const Graph& g, VertexId x, VertexId y, VertexId x2, VertexId y2,
                    const DistanceData& dd) {
    const SeparationSets first = separation_sets(g, x, y, dd);
    const SeparationSets second = separation_sets(g, x2, y2, dd);
    return sides_equal(first, second);
}

std::vector<VertexId> parallel_neighbors(const Graph& g, VertexId x, VertexId y, VertexId from,
                                         const DistanceData& dd) {
    if (!g.has_edge(x, y)) {
        throw GraphError("parallel_neighbors: (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") is not an edge");
    }
    if (dd.distance(x, from) >= dd.distance(y, from)) {
        throw GraphError("parallel_neighbors: vertex " + std::to_string(from) +
                         " is not strictly closer to " + std::to_string(x));
    }
    const SeparationSets base = separation_sets(g, x, y, dd);
    std::vector<VertexId> partners;
    for (VertexId w : g.neighbors(from)) {
        if (sides_equal(base, separation_sets(g, from, w, dd))) {
            partners.push_back(w);
        }
    }
    return partners;
}

CrossCheckReport cross_check_reflection_constructions(const Graph& g, const DistanceData& dd) {
    CrossCheckReport report;
    for (const Edge& e : g.edges()) {
        for (const auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            const auto outcome = candidate_reflection(g, x, y, dd);
            if (!outcome.reflection) {
                report.ok = false;
                report.detail = "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") has no reflection: " + outcome.failure;
                return report;
            }
            const auto sets = separation_sets(g, x, y, dd);
            for (VertexId from : sets.side_x) {
                const auto partners = parallel_neighbors(g, x, y, from, dd);
                if (partners.size() != 1 || partners[0] != outcome.reflection->phi[from]) {
                    report.ok = false;
                    report.detail = "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                                    "), vertex " + std::to_string(from) +
                                    ": parallel transport and cut matching disagree";
                    return report;
                }
            }
        }
    }
    report.ok = true;
    return report;
}

}  // namespace graphcurv
