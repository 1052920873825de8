#include "graphcurv/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

namespace graphcurv {

Graph Graph::from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edge_list) {
    if (n == 0) {
        throw GraphError("graph must have at least one vertex");
    }
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a >= n || b >= n) {
            throw GraphError("endpoint " + std::to_string(std::max(a, b)) + " out of range [0, " +
                             std::to_string(n) + ")");
        }
        if (a == b) {
            throw GraphError("self-loop at vertex " + std::to_string(a));
        }
        g.edges_.push_back(make_edge(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + ", " +
                         std::to_string(dup->v) + ")");
    }
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= n_ || b >= n_ || a == b) {
        return false;
    }
    const auto& nbrs = adj_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::edge_index(VertexId a, VertexId b) const {
    const Edge e = make_edge(a, b);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        throw GraphError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                         ") not in graph");
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_connected() const {
    if (n_ == 0) {
        return false;
    }
    std::vector<char> seen(n_, 0);
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = 1;
    VertexId reached = 1;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        for (VertexId w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == n_;
}

bool Graph::is_regular() const {
    for (VertexId v = 1; v < n_; ++v) {
        if (adj_[v].size() != adj_[0].size()) {
            return false;
        }
    }
    return true;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const VertexId n1 = g1.num_vertices();
    const VertexId n2 = g2.num_vertices();
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g1.num_edges() * n2 + g2.num_edges() * n1);
    for (const Edge& e : g1.edges()) {
        for (VertexId b = 0; b < n2; ++b) {
            edges.emplace_back(e.u * n2 + b, e.v * n2 + b);
        }
    }
    for (VertexId a = 0; a < n1; ++a) {
        for (const Edge& e : g2.edges()) {
            edges.emplace_back(a * n2 + e.u, a * n2 + e.v);
        }
    }
    return Graph::from_edges(n1 * n2, edges);
}

Graph gen_complete(VertexId n) {
    if (n < 1) {
        throw GraphError("gen_complete: n must be >= 1");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_cycle(VertexId n) {
    if (n < 3) {
        throw GraphError("gen_cycle: n must be >= 3");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_path(VertexId n) {
    if (n < 1) {
        throw GraphError("gen_path: n must be >= 1");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_hypercube(unsigned n) {
    if (n < 1 || n > 20) {
        throw GraphError("gen_hypercube: n must be in [1, 20]");
    }
    const VertexId count = VertexId{1} << n;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < count; ++v) {
        for (unsigned bit = 0; bit < n; ++bit) {
            const VertexId w = v ^ (VertexId{1} << bit);
            if (v < w) {
                edges.emplace_back(v, w);
            }
        }
    }
    return Graph::from_edges(count, edges);
}

Graph gen_cocktail_party(unsigned n) {
    if (n < 2) {
        throw GraphError("gen_cocktail_party: n must be >= 2");
    }
    const VertexId count = 2 * n;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < count; ++u) {
        for (VertexId v = u + 1; v < count; ++v) {
            const bool matched = (u / 2 == v / 2);
            if (!matched) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(count, edges);
}

namespace {

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<unsigned>> k_subsets(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(k);
    for (unsigned i = 0; i < k; ++i) {
        cur[i] = i;
    }
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && cur[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

unsigned intersection_size(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned count = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

}  // namespace

Graph gen_johnson(unsigned n, unsigned k) {
    if (k < 1 || k >= n) {
        throw GraphError("gen_johnson: requires 1 <= k <= n-1");
    }
    const auto subsets = k_subsets(n, k);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            if (intersection_size(subsets[i], subsets[j]) == k - 1) {
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        }
    }
    return Graph::from_edges(static_cast<VertexId>(subsets.size()), edges);
}

Graph gen_halved_cube(unsigned n) {
    if (n < 2 || n > 20) {
        throw GraphError("gen_halved_cube: n must be in [2, 20]");
    }
    std::vector<std::uint32_t> strings;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        if (__builtin_popcount(s) % 2 == 0) {
            strings.push_back(s);
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t j = i + 1; j < strings.size(); ++j) {
            if (__builtin_popcount(strings[i] ^ strings[j]) == 2) {
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        }
    }
    return Graph::from_edges(static_cast<VertexId>(strings.size()), edges);
}

Graph gen_schlafli() {
    // Vertices 0..5 are a_i, 6..11 are b_i, 12..26 are c_{ij} with i < j in
    // lexicographic order. Two lines intersect per the rules below; the
    // Schlafli graph is the complement of the intersection graph.
    const unsigned kLines = 27;
    auto pair_index = [](unsigned i, unsigned j) {
        // position of {i, j}, i < j, among the 2-subsets of {0..5}
        unsigned idx = 0;
        for (unsigned a = 0; a < i; ++a) {
            idx += 5 - a;
        }
        return 12 + idx + (j - i - 1);
    };
    std::vector<std::vector<char>> meets(kLines, std::vector<char>(kLines, 0));
    auto set_meet = [&](unsigned x, unsigned y) {
        meets[x][y] = 1;
        meets[y][x] = 1;
    };
    for (unsigned i = 0; i < 6; ++i) {
        for (unsigned j = 0; j < 6; ++j) {
            if (i != j) {
                set_meet(i, 6 + j);  // a_i meets b_j iff i != j
            }
        }
    }
    for (unsigned i = 0; i < 6; ++i) {
        for (unsigned j = i + 1; j < 6; ++j) {
            const unsigned c = pair_index(i, j);
            set_meet(i, c);      // a_i meets c_{ij}
            set_meet(j, c);      // a_j meets c_{ij}
            set_meet(6 + i, c);  // b_i meets c_{ij}
            set_meet(6 + j, c);
        }
    }
    for (unsigned i = 0; i < 6; ++i) {
        for (unsigned j = i + 1; j < 6; ++j) {
            for (unsigned k = 0; k < 6; ++k) {
                for (unsigned l = k + 1; l < 6; ++l) {
                    if (k != i && k != j && l != i && l != j) {
                        set_meet(pair_index(i, j), pair_index(k, l));
                    }
                }
            }
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (unsigned u = 0; u < kLines; ++u) {
        for (unsigned v = u + 1; v < kLines; ++v) {
            if (!meets[u][v]) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(kLines, edges);
}

Graph gen_gosset() {
    // 2-subsets of {0..7}, each in a + copy (index p) and a - copy (28 + p).
    const auto pairs = k_subsets(8, 2);
    const VertexId half = static_cast<VertexId>(pairs.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < half; ++i) {
        for (VertexId j = i + 1; j < half; ++j) {
            const unsigned common = intersection_size(pairs[i], pairs[j]);
            if (common == 1) {  // same sign: share exactly one element
                edges.emplace_back(i, j);
                edges.emplace_back(half + i, half + j);
            }
        }
    }
    for (VertexId i = 0; i < half; ++i) {
        for (VertexId j = 0; j < half; ++j) {
            if (intersection_size(pairs[i], pairs[j]) == 0) {  // opposite sign: disjoint
                edges.emplace_back(i, half + j);
            }
        }
    }
    return Graph::from_edges(2 * half, edges);
}

namespace {

// Platform-stable uniform double in [0, 1); mt19937_64 output is pinned by
// the standard, the distribution adapters are not.
double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph gen_erdos_renyi_connected(VertexId n, double p, std::uint64_t seed, unsigned max_resamples) {
    if (n < 2) {
        throw GraphError("gen_erdos_renyi_connected: n must be >= 2");
    }
    if (!(p > 0.0) || p > 1.0) {
        throw GraphError("gen_erdos_renyi_connected: p must be in (0, 1]");
    }
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt < max_resamples; ++attempt) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = u + 1; v < n; ++v) {
                if (uniform_unit(rng) < p) {
                    edges.emplace_back(u, v);
                }
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (g.is_connected()) {
            return g;
        }
    }
    throw GraphError("gen_erdos_renyi_connected: no connected sample after " +
                     std::to_string(max_resamples) + " attempts (n=" + std::to_string(n) +
                     ", p=" + std::to_string(p) + ")");
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                return true;
            }
        }
        return false;
    };
    auto parse_two = [&](long long& a, long long& b) {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw GraphError("line " + std::to_string(line_no) + ": expected two integers");
        }
        if (a < 0 || b < 0) {
            throw GraphError("line " + std::to_string(line_no) + ": negative vertex index");
        }
    };
    if (!next_line()) {
        throw GraphError("empty edge-list input");
    }
    long long n = 0;
    long long m = 0;
    parse_two(n, m);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) {
            throw GraphError("unexpected end of input: expected " + std::to_string(m) +
                             " edges, got " + std::to_string(i));
        }
        long long a = 0;
        long long b = 0;
        parse_two(a, b);
        if (a >= n || b >= n) {
            throw GraphError("line " + std::to_string(line_no) + ": endpoint " +
                             std::to_string(std::max(a, b)) + " out of range [0, " +
                             std::to_string(n) + ")");
        }
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (next_line()) {
        throw GraphError("line " + std::to_string(line_no) + ": trailing content after " +
                         std::to_string(m) + " edges");
    }
    try {
        return Graph::from_edges(static_cast<VertexId>(n), edges);
    } catch (const GraphError& e) {
        throw GraphError(std::string("invalid edge list: ") + e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

}  // namespace graphcurv
