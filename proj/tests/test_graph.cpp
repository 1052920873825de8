#include "graphcurv/graph.hpp"
#include "graphcurv/isomorphism.hpp"

#include <doctest.h>

#include <algorithm>

using namespace graphcurv;

TEST_CASE("build_graph canonicalizes and validates") {
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.num_edges() == 1);
    CHECK(k2.degree(0) == 1);
    CHECK(k2.degree(1) == 1);

    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.num_edges() == 3);
    for (VertexId v = 0; v < 3; ++v) {
        CHECK(k3.degree(v) == 2);
    }

    // Orientation does not matter, the canonical edge does.
    const Graph flipped = Graph::from_edges(3, {{1, 0}, {2, 1}, {0, 2}});
    CHECK(flipped == k3);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphError);  // duplicate, reversed
    CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
}

TEST_CASE("edge lookup") {
    const Graph k3 = gen_complete(3);
    CHECK(k3.has_edge(0, 2));
    CHECK(k3.has_edge(2, 0));
    CHECK(!k3.has_edge(0, 0));
    CHECK(k3.edge_index(2, 1) == 2);  // edges sorted: (0,1), (0,2), (1,2)
    CHECK_THROWS_AS(gen_path(3).edge_index(0, 2), GraphError);
}

TEST_CASE("cartesian product") {
    const Graph k2 = gen_complete(2);
    const Graph square = cartesian_product(k2, k2);
    CHECK(square.num_vertices() == 4);
    CHECK(square.num_edges() == 4);
    CHECK(square.is_regular());
    CHECK(is_isomorphic(square, gen_cycle(4)));

    const Graph q3 = cartesian_product(square, k2);
    CHECK(q3.num_vertices() == 8);
    CHECK(q3.num_edges() == 12);
    CHECK(q3.degree(0) == 3);
    CHECK(is_isomorphic(q3, gen_hypercube(3)));

    // Identity factor.
    const Graph path = gen_path(4);
    CHECK(is_isomorphic(cartesian_product(path, gen_complete(1)), path));

    // Row-major indexing makes the product associative on the nose.
    const Graph k3 = gen_complete(3);
    const Graph c4 = gen_cycle(4);
    CHECK(cartesian_product(cartesian_product(k3, k2), c4) ==
          cartesian_product(k3, cartesian_product(k2, c4)));

    // Degrees add across factors.
    const Graph prod = cartesian_product(gen_path(3), k3);
    for (VertexId a = 0; a < 3; ++a) {
        for (VertexId b = 0; b < 3; ++b) {
            CHECK(prod.degree(a * 3 + b) == gen_path(3).degree(a) + k3.degree(b));
        }
    }
}

namespace {

void check_handshake(const Graph& g) {
    std::size_t total = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        total += g.degree(v);
    }
    CHECK(total == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("basic generators") {
    const Graph k4 = gen_complete(4);
    CHECK(k4.num_edges() == 6);
    CHECK(k4.is_regular());
    CHECK(k4.degree(0) == 3);

    const Graph c5 = gen_cycle(5);
    CHECK(c5.num_edges() == 5);
    CHECK(c5.is_regular());
    CHECK(c5.degree(0) == 2);
    CHECK_THROWS_AS(gen_cycle(2), GraphError);

    CHECK(gen_path(1).num_edges() == 0);
    CHECK(gen_path(5).num_edges() == 4);

    CHECK(gen_hypercube(1) == gen_complete(2));
    const Graph q4 = gen_hypercube(4);
    CHECK(q4.num_vertices() == 16);
    CHECK(q4.num_edges() == 32);

    for (const Graph& g : {k4, c5, q4, gen_path(7)}) {
        check_handshake(g);
        CHECK(g.is_connected());
    }
}

TEST_CASE("cocktail party graphs") {
    CHECK_THROWS_AS(gen_cocktail_party(1), GraphError);

    const Graph cp2 = gen_cocktail_party(2);
    CHECK(cp2.num_vertices() == 4);
    CHECK(is_isomorphic(cp2, gen_cycle(4)));

    const Graph cp3 = gen_cocktail_party(3);
    CHECK(cp3.num_vertices() == 6);
    CHECK(cp3.is_regular());
    CHECK(cp3.degree(0) == 4);
    // The removed matching is exactly the non-adjacent pairs.
    for (VertexId v = 0; v < 6; ++v) {
        CHECK(!cp3.has_edge(v, v ^ 1));
    }
    check_handshake(cp3);
}

TEST_CASE("johnson graphs") {
    CHECK_THROWS_AS(gen_johnson(4, 0), GraphError);
    CHECK_THROWS_AS(gen_johnson(4, 4), GraphError);

    for (unsigned n = 2; n <= 6; ++n) {
        CHECK(is_isomorphic(gen_johnson(n, 1), gen_complete(n)));
    }

    const Graph j42 = gen_johnson(4, 2);
    CHECK(j42.num_vertices() == 6);
    CHECK(j42.is_regular());
    CHECK(j42.degree(0) == 4);
    CHECK(is_isomorphic(j42, gen_cocktail_party(3)));

    const Graph j52 = gen_johnson(5, 2);
    CHECK(j52.num_vertices() == 10);
    CHECK(j52.is_regular());
    CHECK(j52.degree(0) == 6);
    check_handshake(j52);

    const Graph j63 = gen_johnson(6, 3);
    CHECK(j63.num_vertices() == 20);
    CHECK(j63.degree(0) == 9);
}

TEST_CASE("halved cubes") {
    CHECK_THROWS_AS(gen_halved_cube(1), GraphError);

    const Graph h2 = gen_halved_cube(2);
    CHECK(h2.num_vertices() == 2);
    CHECK(h2.num_edges() == 1);

    CHECK(is_isomorphic(gen_halved_cube(3), gen_complete(4)));
    CHECK(is_isomorphic(gen_halved_cube(4), gen_cocktail_party(4)));

    const Graph h5 = gen_halved_cube(5);
    CHECK(h5.num_vertices() == 16);
    CHECK(h5.is_regular());
    CHECK(h5.degree(0) == 10);  // C(5, 2)
    check_handshake(h5);
}

namespace {

unsigned common_neighbors(const Graph& g, VertexId u, VertexId v) {
    unsigned count = 0;
    for (VertexId w : g.neighbors(u)) {
        if (g.has_edge(w, v)) {
            ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("schlafli graph") {
    const Graph s = gen_schlafli();
    CHECK(s.num_vertices() == 27);
    CHECK(s.num_edges() == 216);
    CHECK(s.is_regular());
    CHECK(s.degree(0) == 16);
    // Strongly regular with parameters (27, 16, 10, 8), checked pairwise.
    for (VertexId u = 0; u < 27; ++u) {
        for (VertexId v = u + 1; v < 27; ++v) {
            CHECK(common_neighbors(s, u, v) == (s.has_edge(u, v) ? 10u : 8u));
        }
    }
}

TEST_CASE("gosset graph") {
    const Graph g = gen_gosset();
    CHECK(g.num_vertices() == 56);
    CHECK(g.num_edges() == 756);
    CHECK(g.is_regular());
    CHECK(g.degree(0) == 27);

    // Local graph of any vertex matches the Schlafli degree.
    const auto& local = g.neighbors(0);
    CHECK(local.size() == 27);
    for (VertexId w : local) {
        unsigned inside = 0;
        for (VertexId z : g.neighbors(w)) {
            if (std::binary_search(local.begin(), local.end(), z)) {
                ++inside;
            }
        }
        CHECK(inside == 16);
    }
}

TEST_CASE("random connected graphs") {
    const Graph a = gen_erdos_renyi_connected(10, 0.5, 7);
    const Graph b = gen_erdos_renyi_connected(10, 0.5, 7);
    CHECK(a == b);
    CHECK(a.is_connected());

    CHECK(gen_erdos_renyi_connected(5, 1.0, 123) == gen_complete(5));

    CHECK_THROWS_WITH_AS(gen_erdos_renyi_connected(4, 0.01, 1),
                         doctest::Contains("no connected sample"), GraphError);
}

TEST_CASE("edge list round trip") {
    CHECK(read_edge_list("3 3\n0 1\n1 2\n2 0\n") == gen_complete(3));
    const Graph g = gen_erdos_renyi_connected(9, 0.4, 3);
    CHECK(read_edge_list(write_edge_list(g)) == g);
    CHECK(write_edge_list(gen_complete(3)) == "3 3\n0 1\n0 2\n1 2\n");

    CHECK_THROWS_WITH_AS(read_edge_list("2 1\n0 2\n"), doctest::Contains("line 2"), GraphError);
    CHECK_THROWS_AS(read_edge_list(""), GraphError);
    CHECK_THROWS_AS(read_edge_list("2 2\n0 1\n"), GraphError);       // missing edge
    CHECK_THROWS_AS(read_edge_list("2 1\n0 1\n1 0\n"), GraphError);  // trailing content
    CHECK_THROWS_AS(read_edge_list("2 1\n0 1 9\n"), GraphError);     // extra token
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n1 1\n"), GraphError);  // self-loop
}

TEST_CASE("isomorphism utility") {
    CHECK(is_isomorphic(gen_cycle(5), gen_cycle(5)));
    CHECK(!is_isomorphic(gen_cycle(6), gen_path(6)));
    // Prism and C_6 share the degree sequence but differ.
    const Graph prism = cartesian_product(gen_complete(3), gen_complete(2));
    CHECK(!is_isomorphic(prism, gen_cycle(6)));
    CHECK_THROWS_AS(is_isomorphic(gen_gosset(), gen_gosset()), GraphError);
}
