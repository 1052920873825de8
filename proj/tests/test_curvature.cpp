#include "graphcurv/curvature.hpp"

#include "graphcurv/graph.hpp"
#include "graphcurv/metrics.hpp"

#include <doctest.h>

#include <vector>

using namespace graphcurv;

namespace {

// Small graphs where the oracle budget always holds.
std::vector<Graph> small_corpus() {
    std::vector<Graph> corpus = {
        gen_complete(2),
        gen_complete(4),
        gen_complete(6),
        gen_cycle(4),
        gen_cycle(5),
        gen_cycle(6),
        gen_path(3),
        gen_path(6),
        gen_hypercube(3),
        gen_johnson(4, 2),
        gen_cocktail_party(3),
        gen_cocktail_party(5),
        gen_johnson(5, 2),
        cartesian_product(gen_complete(3), gen_complete(2)),
        gen_erdos_renyi_connected(9, 0.4, 31),
        gen_erdos_renyi_connected(12, 0.35, 32),
        gen_erdos_renyi_connected(12, 0.6, 33),
    };
    return corpus;
}

}  // namespace

TEST_CASE("curvature closed forms") {
    for (VertexId n = 2; n <= 6; ++n) {
        const Graph g = gen_complete(n);
        CHECK(ollivier_curvature(g, 0, 1) == Rational(n));
    }
    const Graph c5 = gen_cycle(5);
    CHECK(ollivier_curvature(c5, 0, 1) == Rational(1));
    const Graph c6 = gen_cycle(6);
    CHECK(ollivier_curvature(c6, 0, 1) == Rational(0));
    const Graph p3 = gen_path(3);
    CHECK(ollivier_curvature(p3, 0, 1) == Rational(1));
    CHECK(ollivier_curvature(p3, 1, 2) == Rational(1));
    const Graph q3 = gen_hypercube(3);
    const DistanceData dd = all_pairs(q3);
    for (const Edge& e : q3.edges()) {
        CHECK(ollivier_curvature(q3, e.u, e.v, dd) == Rational(2));
    }

    CHECK_THROWS_AS(ollivier_curvature(c5, 0, 2), GraphError);
}

TEST_CASE("oracle values and budget") {
    const Graph k2 = gen_complete(2);
    const auto k2_oracle = curvature_oracle(k2, 0, 1, all_pairs(k2));
    REQUIRE(k2_oracle.available);
    CHECK(k2_oracle.value == Rational(2));

    const Graph c5 = gen_cycle(5);
    const auto c5_oracle = curvature_oracle(c5, 0, 1, all_pairs(c5));
    REQUIRE(c5_oracle.available);
    CHECK(c5_oracle.value == Rational(1));

    // The Gosset ball union (38 vertices) is far beyond the budget.
    const Graph gosset = gen_gosset();
    const auto refused = curvature_oracle(gosset, gosset.edges()[0].u, gosset.edges()[0].v,
                                          all_pairs(gosset));
    CHECK(!refused.available);
}

TEST_CASE("solver agrees with the enumeration oracle") {
    for (const Graph& g : small_corpus()) {
        const DistanceData dd = all_pairs(g);
        for (const Edge& e : g.edges()) {
            const auto oracle = curvature_oracle(g, e.u, e.v, dd);
            REQUIRE(oracle.available);
            CHECK(ollivier_curvature(g, e.u, e.v, dd) == oracle.value);
        }
    }
}

TEST_CASE("ball-union support equals the full-vertex LP") {
    for (const Graph& g : small_corpus()) {
        if (g.num_vertices() > 12) {
            continue;
        }
        const DistanceData dd = all_pairs(g);
        for (const Edge& e : g.edges()) {
            CHECK(ollivier_curvature(g, e.u, e.v, dd) ==
                  ollivier_curvature(g, e.u, e.v, dd, LpSupport::kFullVertexSet));
        }
    }
}

TEST_CASE("pair-constraint reduction does not move the optimum") {
    for (const Graph& g : small_corpus()) {
        if (g.num_vertices() > 10) {
            continue;
        }
        const DistanceData dd = all_pairs(g);
        for (const Edge& e : g.edges()) {
            CHECK(ollivier_curvature(g, e.u, e.v, dd) ==
                  detail::lipschitz_optimum_unreduced(g, e.u, e.v, dd, LpSupport::kBallUnion));
            CHECK(ollivier_curvature(g, e.u, e.v, dd, LpSupport::kFullVertexSet) ==
                  detail::lipschitz_optimum_unreduced(g, e.u, e.v, dd,
                                                      LpSupport::kFullVertexSet));
        }
    }
}

TEST_CASE("curvature is symmetric and integral") {
    // The program is written from x's side; equality across both
    // orientations is a genuine solver check, not a syntactic one.
    for (const Graph& g : small_corpus()) {
        const DistanceData dd = all_pairs(g);
        for (const Edge& e : g.edges()) {
            const Rational xy = ollivier_curvature(g, e.u, e.v, dd);
            CHECK(xy == ollivier_curvature(g, e.v, e.u, dd));
            CHECK(is_integer(xy));
        }
    }
}

TEST_CASE("product edges inherit the factor curvature") {
    const Graph k3 = gen_complete(3);
    const Graph k2 = gen_complete(2);
    const Graph prism = cartesian_product(k3, k2);
    const DistanceData dd = all_pairs(prism);
    for (const Edge& e : prism.edges()) {
        const bool k2_direction = e.u / 2 == e.v / 2;  // same K_3 coordinate
        CHECK(ollivier_curvature(prism, e.u, e.v, dd) == Rational(k2_direction ? 2 : 3));
    }
}

TEST_CASE("edge-transitive families have constant curvature") {
    const Graph s = gen_schlafli();
    const EdgeMeasure ric = curvature_all_edges(s, all_pairs(s));
    for (const Rational& v : ric.values) {
        CHECK(v == Rational(12));
    }
}

TEST_CASE("batch curvature is identical across worker counts") {
    const Graph g = gen_johnson(5, 2);
    const DistanceData dd = all_pairs(g);
    CHECK(curvature_all_edges(g, dd, 1).values == curvature_all_edges(g, dd, 4).values);
}

TEST_CASE("weighted curvature average") {
    const Graph c5 = gen_cycle(5);
    const DistanceData dd = all_pairs(c5);
    const EdgeMeasure weights = edge_betweenness(c5);
    const EdgeMeasure ric = curvature_all_edges(c5, dd);
    CHECK(average_curvature_weighted(c5, weights, ric) == Rational(1));

    const Graph p3 = gen_path(3);
    CHECK(average_curvature_weighted(p3, edge_betweenness(p3),
                                     curvature_all_edges(p3, all_pairs(p3))) == Rational(1));

    // Rescaling the weight measure cannot move the average.
    const Graph j42 = gen_johnson(4, 2);
    const EdgeMeasure w = edge_betweenness(j42);
    const EdgeMeasure r = curvature_all_edges(j42, all_pairs(j42));
    EdgeMeasure scaled = w;
    for (auto& v : scaled.values) {
        v *= Rational(7, 3);
    }
    CHECK(average_curvature_weighted(j42, w, r) == average_curvature_weighted(j42, scaled, r));

    EdgeMeasure mismatched = w;
    mismatched.values.pop_back();
    CHECK_THROWS_AS(average_curvature_weighted(j42, mismatched, r), GraphError);
}
