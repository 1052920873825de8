#include "graphcurv/isomorphism.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace graphcurv {

namespace {

// Sorted multiset of BFS distances from v; isomorphism-invariant per vertex.
std::vector<int> distance_profile(const Graph& g, VertexId v) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<VertexId> queue;
    dist[v] = 0;
    queue.push(v);
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push(w);
            }
        }
    }
    std::sort(dist.begin(), dist.end());
    return dist;
}

struct Matcher {
    const Graph* a;
    const Graph* b;
    std::vector<std::vector<char>> candidate;  // candidate[va][vb]
    std::vector<VertexId> map_ab;
    std::vector<char> used_b;

    bool extend(VertexId va) {
        if (va == a->num_vertices()) {
            return true;
        }
        for (VertexId vb = 0; vb < b->num_vertices(); ++vb) {
            if (used_b[vb] || !candidate[va][vb]) {
                continue;
            }
            bool consistent = true;
            for (VertexId prev = 0; prev < va; ++prev) {
                if (a->has_edge(prev, va) != b->has_edge(map_ab[prev], vb)) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) {
                continue;
            }
            map_ab[va] = vb;
            used_b[vb] = 1;
            if (extend(va + 1)) {
                return true;
            }
            used_b[vb] = 0;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() > 30 || b.num_vertices() > 30) {
        throw GraphError("is_isomorphic: refusing graphs above 30 vertices");
    }
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
        return false;
    }
    const VertexId n = a.num_vertices();

    std::vector<std::vector<int>> profile_a(n);
    std::vector<std::vector<int>> profile_b(n);
    for (VertexId v = 0; v < n; ++v) {
        profile_a[v] = distance_profile(a, v);
        profile_b[v] = distance_profile(b, v);
    }
    {
        auto sorted_a = profile_a;
        auto sorted_b = profile_b;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) {
            return false;
        }
    }

    Matcher matcher;
    matcher.a = &a;
    matcher.b = &b;
    matcher.candidate.assign(n, std::vector<char>(n, 0));
    for (VertexId va = 0; va < n; ++va) {
        for (VertexId vb = 0; vb < n; ++vb) {
            matcher.candidate[va][vb] =
                a.degree(va) == b.degree(vb) && profile_a[va] == profile_b[vb];
        }
    }
    matcher.map_ab.assign(n, 0);
    matcher.used_b.assign(n, 0);
    return matcher.extend(0);
}

}  // namespace graphcurv
