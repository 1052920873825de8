#pragma once

// Test-only oracles. Both stay independent of the library's computation
// paths: betweenness is re-derived by literally enumerating every geodesic,
// and the tree corpus comes from decoding all Pruefer sequences.

#include "graphcurv/graph.hpp"
#include "graphcurv/metrics.hpp"
#include "graphcurv/rational.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace graphcurv::testing {

inline std::vector<int> bfs_distances(const Graph& g, VertexId source) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

namespace detail {

// Walks every geodesic from `cur` back to the source along strictly
// decreasing distances, counting paths and per-edge usage.
inline void enumerate_geodesics(const Graph& g, const std::vector<int>& dist, VertexId cur,
                                std::vector<std::size_t>& edge_stack, long long& paths,
                                std::vector<long long>& usage) {
    if (dist[cur] == 0) {
        ++paths;
        for (std::size_t e : edge_stack) {
            ++usage[e];
        }
        return;
    }
    for (VertexId w : g.neighbors(cur)) {
        if (dist[w] + 1 == dist[cur]) {
            edge_stack.push_back(g.edge_index(w, cur));
            enumerate_geodesics(g, dist, w, edge_stack, paths, usage);
            edge_stack.pop_back();
        }
    }
}

}  // namespace detail

/// Betweenness by full geodesic enumeration; only sensible for tiny graphs.
inline EdgeMeasure naive_edge_betweenness(const Graph& g) {
    const VertexId n = g.num_vertices();
    EdgeMeasure out;
    out.values.assign(g.num_edges(), Rational(0));
    for (VertexId x = 0; x < n; ++x) {
        const auto dist = bfs_distances(g, x);
        for (VertexId y = 0; y < n; ++y) {
            if (x == y) {
                continue;
            }
            long long paths = 0;
            std::vector<long long> usage(g.num_edges(), 0);
            std::vector<std::size_t> stack;
            detail::enumerate_geodesics(g, dist, y, stack, paths, usage);
            for (std::size_t e = 0; e < g.num_edges(); ++e) {
                if (usage[e] != 0) {
                    out.values[e] += Rational(usage[e], paths);
                }
            }
        }
    }
    const Rational norm(BigInt(1), BigInt(n) * n);
    for (auto& v : out.values) {
        v *= norm;
    }
    return out;
}

namespace detail {

inline Graph prufer_decode(unsigned n, const std::vector<VertexId>& seq) {
    std::vector<unsigned> degree(n, 1);
    for (VertexId a : seq) {
        ++degree[a];
    }
    std::vector<char> used(n, 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a : seq) {
        for (VertexId leaf = 0; leaf < n; ++leaf) {
            if (!used[leaf] && degree[leaf] == 1) {
                edges.emplace_back(leaf, a);
                used[leaf] = 1;
                --degree[a];
                break;
            }
        }
    }
    VertexId first = n;
    for (VertexId v = 0; v < n; ++v) {
        if (!used[v] && degree[v] == 1) {
            if (first == n) {
                first = v;
            } else {
                edges.emplace_back(first, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

inline std::string ahu_encode(const Graph& g, VertexId v, VertexId parent) {
    std::vector<std::string> subs;
    for (VertexId w : g.neighbors(v)) {
        if (w != parent) {
            subs.push_back(ahu_encode(g, w, v));
        }
    }
    std::sort(subs.begin(), subs.end());
    std::string out = "(";
    for (const auto& s : subs) {
        out += s;
    }
    out += ")";
    return out;
}

// Canonical string of a free tree: root at the center (or combine the two
// center-rooted encodings for bicentral trees).
inline std::string tree_canonical(const Graph& g) {
    const VertexId n = g.num_vertices();
    std::vector<unsigned> degree(n);
    std::vector<char> removed(n, 0);
    std::vector<VertexId> layer;
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) {
            layer.push_back(v);
        }
    }
    VertexId remaining = n;
    while (remaining > 2) {
        std::vector<VertexId> next;
        for (VertexId v : layer) {
            removed[v] = 1;
            --remaining;
            for (VertexId w : g.neighbors(v)) {
                if (!removed[w] && --degree[w] == 1) {
                    next.push_back(w);
                }
            }
        }
        layer = std::move(next);
    }
    std::vector<VertexId> centers;
    for (VertexId v = 0; v < n; ++v) {
        if (!removed[v]) {
            centers.push_back(v);
        }
    }
    if (centers.size() == 1) {
        return ahu_encode(g, centers[0], centers[0]);
    }
    const std::string a = ahu_encode(g, centers[0], centers[1]);
    const std::string b = ahu_encode(g, centers[1], centers[0]);
    return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace detail

/// Every unlabeled tree on exactly n vertices (n >= 3), one representative
/// per isomorphism class.
inline std::vector<Graph> all_trees(unsigned n) {
    std::vector<Graph> trees;
    std::set<std::string> seen;
    std::vector<VertexId> seq(n - 2, 0);
    while (true) {
        Graph t = detail::prufer_decode(n, seq);
        if (seen.insert(detail::tree_canonical(t)).second) {
            trees.push_back(std::move(t));
        }
        std::size_t i = 0;
        while (i < seq.size() && seq[i] + 1 == n) {
            seq[i] = 0;
            ++i;
        }
        if (i == seq.size()) {
            break;
        }
        ++seq[i];
    }
    return trees;
}

}  // namespace graphcurv::testing
