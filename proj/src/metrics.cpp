#include "graphcurv/metrics.hpp"

#include "graphcurv/parallel.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace graphcurv {

int DistanceData::diameter() const {
    int best = 0;
    for (int d : dist) {
        best = std::max(best, d);
    }
    return best;
}

namespace {

// Single-source BFS filling one row of dist/sigma. Returns the BFS order.
std::vector<VertexId> bfs_row(const Graph& g, VertexId s, int* dist_row, BigInt* sigma_row) {
    const VertexId n = g.num_vertices();
    std::fill(dist_row, dist_row + n, -1);
    std::fill(sigma_row, sigma_row + n, BigInt(0));
    std::vector<VertexId> order;
    order.reserve(n);
    dist_row[s] = 0;
    sigma_row[s] = 1;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const VertexId v = order[head];
        for (VertexId w : g.neighbors(v)) {
            if (dist_row[w] < 0) {
                dist_row[w] = dist_row[v] + 1;
                order.push_back(w);
            }
            if (dist_row[w] == dist_row[v] + 1) {
                sigma_row[w] += sigma_row[v];
            }
        }
    }
    return order;
}

}  // namespace

DistanceData all_pairs(const Graph& g) {
    const VertexId n = g.num_vertices();
    DistanceData dd;
    dd.n = n;
    dd.dist.assign(static_cast<std::size_t>(n) * n, -1);
    dd.sigma.assign(static_cast<std::size_t>(n) * n, BigInt(0));
    for (VertexId s = 0; s < n; ++s) {
        const auto order =
            bfs_row(g, s, dd.dist.data() + static_cast<std::size_t>(s) * n,
                    dd.sigma.data() + static_cast<std::size_t>(s) * n);
        if (order.size() != n) {
            std::vector<char> seen(n, 0);
            for (VertexId v : order) {
                seen[v] = 1;
            }
            VertexId missing = 0;
            while (seen[missing]) {
                ++missing;
            }
            throw GraphError("graph is disconnected: vertex " + std::to_string(missing) +
                             " unreachable from vertex " + std::to_string(s));
        }
    }
    return dd;
}

Rational average_distance(const Graph& g, const DistanceData& dd) {
    BigInt sum = 0;
    for (int d : dd.dist) {
        sum += d;
    }
    const BigInt pairs = BigInt(g.num_vertices()) * g.num_vertices();
    return Rational(sum, pairs);
}

Rational average_distance(const Graph& g) {
    return average_distance(g, all_pairs(g));
}

Rational average_degree(const Graph& g) {
    return Rational(BigInt(2) * g.num_edges(), BigInt(g.num_vertices()));
}

Rational EdgeMeasure::total() const {
    Rational sum = 0;
    for (const Rational& v : values) {
        sum += v;
    }
    return sum;
}

namespace {

// One source's contribution to every edge: sum over targets t of
// sigma_st(e) / sigma_st. Standard backward accumulation over the BFS DAG.
void accumulate_source(const Graph& g, VertexId s, std::vector<int>& dist,
                       std::vector<BigInt>& sigma, std::vector<Rational>& acc) {
    const auto order = bfs_row(g, s, dist.data(), sigma.data());
    if (order.size() != g.num_vertices()) {
        throw GraphError("edge_betweenness requires a connected graph");
    }
    std::vector<Rational> delta(g.num_vertices(), Rational(0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId w = *it;
        for (VertexId v : g.neighbors(w)) {
            if (dist[v] + 1 == dist[w]) {
                Rational contribution = Rational(sigma[v], sigma[w]) * (Rational(1) + delta[w]);
                acc[g.edge_index(v, w)] += contribution;
                delta[v] += contribution;
            }
        }
    }
}

}  // namespace

EdgeMeasure edge_betweenness(const Graph& g, unsigned threads) {
    if (!g.is_connected()) {
        throw GraphError("edge_betweenness requires a connected graph");
    }
    const VertexId n = g.num_vertices();
    const std::size_t m = g.num_edges();
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(effective_threads(threads), n));

    std::vector<std::vector<Rational>> partial(workers, std::vector<Rational>(m, Rational(0)));
    std::atomic<VertexId> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            try {
                std::vector<int> dist(n);
                std::vector<BigInt> sigma(n);
                while (true) {
                    const VertexId s = next.fetch_add(1);
                    if (s >= n) {
                        break;
                    }
                    accumulate_source(g, s, dist, sigma, partial[t]);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    // Exact addition is associative and commutative, so the fixed reduce
    // order below gives bit-identical results for every worker count.
    EdgeMeasure out;
    out.values.assign(m, Rational(0));
    const Rational norm(BigInt(1), BigInt(n) * n);
    for (unsigned t = 0; t < workers; ++t) {
        for (std::size_t e = 0; e < m; ++e) {
            out.values[e] += partial[t][e];
        }
    }
    for (auto& v : out.values) {
        v *= norm;
    }
    return out;
}

std::vector<double> edge_betweenness_approx(const Graph& g) {
    if (!g.is_connected()) {
        throw GraphError("edge_betweenness requires a connected graph");
    }
    const VertexId n = g.num_vertices();
    std::vector<double> acc(g.num_edges(), 0.0);
    std::vector<int> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<VertexId> order;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const VertexId v = order[head];
            for (VertexId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const VertexId w = *it;
            for (VertexId v : g.neighbors(w)) {
                if (dist[v] + 1 == dist[w]) {
                    const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                    acc[g.edge_index(v, w)] += c;
                    delta[v] += c;
                }
            }
        }
    }
    const double norm = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    for (double& v : acc) {
        v *= norm;
    }
    return acc;
}

std::string edge_measure_csv(const Graph& g, const EdgeMeasure& m) {
    std::ostringstream out;
    out << "u,v,numerator,denominator\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        out << e.u << ',' << e.v << ',' << numerator(m.values[i]).str() << ','
            << denominator(m.values[i]).str() << '\n';
    }
    return out.str();
}

}  // namespace graphcurv
