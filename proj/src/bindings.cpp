#include "graphcurv/analysis.hpp"
#include "graphcurv/curvature.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/isomorphism.hpp"
#include "graphcurv/metrics.hpp"
#include "graphcurv/rigidity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace graphcurv;

namespace {

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(g.num_edges());
    for (const Edge& e : g.edges()) {
        out.emplace_back(e.u, e.v);
    }
    return out;
}

// Exact values cross the boundary as "num/den" strings; Python callers can
// hand them to fractions.Fraction unchanged.
std::vector<std::tuple<VertexId, VertexId, std::string>> measure_tuples(const Graph& g,
                                                                        const EdgeMeasure& m) {
    std::vector<std::tuple<VertexId, VertexId, std::string>> out;
    out.reserve(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        out.emplace_back(g.edges()[i].u, g.edges()[i].v, to_fraction_string(m.values[i]));
    }
    return out;
}

AnalysisOptions make_options(bool reflective, unsigned reflective_cap, unsigned threads,
                             bool with_float) {
    AnalysisOptions options;
    options.compute_reflective = reflective;
    options.reflective_cap = reflective_cap;
    options.threads = threads;
    options.with_float = with_float;
    return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Ollivier curvature, edge betweenness and average-distance analytics";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("edges", [](const Graph& g) { return edge_pairs(g); })
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 if (v >= g.num_vertices()) {
                     throw GraphError("vertex out of range");
                 }
                 return g.neighbors(v);
             })
        .def("degree",
             [](const Graph& g, VertexId v) {
                 if (v >= g.num_vertices()) {
                     throw GraphError("vertex out of range");
                 }
                 return g.degree(v);
             })
        .def("has_edge", &Graph::has_edge)
        .def("is_connected", &Graph::is_connected)
        .def("is_regular", &Graph::is_regular)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("build_graph", &Graph::from_edges, py::arg("n"), py::arg("edges"));
    m.def("cartesian_product", &cartesian_product);
    m.def("gen_complete", &gen_complete, py::arg("n"));
    m.def("gen_cycle", &gen_cycle, py::arg("n"));
    m.def("gen_path", &gen_path, py::arg("n"));
    m.def("gen_hypercube", &gen_hypercube, py::arg("n"));
    m.def("gen_cocktail_party", &gen_cocktail_party, py::arg("n"));
    m.def("gen_johnson", &gen_johnson, py::arg("n"), py::arg("k"));
    m.def("gen_halved_cube", &gen_halved_cube, py::arg("n"));
    m.def("gen_schlafli", &gen_schlafli);
    m.def("gen_gosset", &gen_gosset);
    m.def("gen_erdos_renyi_connected", &gen_erdos_renyi_connected, py::arg("n"), py::arg("p"),
          py::arg("seed"), py::arg("max_resamples") = 512);
    m.def("read_edge_list", &read_edge_list, py::arg("text"));
    m.def("write_edge_list", &write_edge_list, py::arg("graph"));
    m.def("is_isomorphic", &is_isomorphic);

    m.def("average_distance", [](const Graph& g) { return to_fraction_string(average_distance(g)); });
    m.def("average_degree", [](const Graph& g) { return to_fraction_string(average_degree(g)); });
    m.def(
        "edge_betweenness",
        [](const Graph& g, unsigned threads) {
            return measure_tuples(g, edge_betweenness(g, threads));
        },
        py::arg("graph"), py::arg("threads") = 0);
    m.def(
        "ollivier_curvature",
        [](const Graph& g, VertexId x, VertexId y) {
            return to_fraction_string(ollivier_curvature(g, x, y));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"));
    m.def(
        "curvature_all_edges",
        [](const Graph& g, unsigned threads) {
            return measure_tuples(g, curvature_all_edges(g, all_pairs(g), threads));
        },
        py::arg("graph"), py::arg("threads") = 0);
    m.def(
        "curvature_oracle",
        [](const Graph& g, VertexId x, VertexId y) -> py::object {
            const OracleResult result = curvature_oracle(g, x, y, all_pairs(g));
            if (!result.available) {
                return py::none();
            }
            return py::cast(to_fraction_string(result.value));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"));

    m.def(
        "separation_sets",
        [](const Graph& g, VertexId x, VertexId y) {
            const SeparationSets s = separation_sets(g, x, y, all_pairs(g));
            return py::make_tuple(s.side_x, s.side_y, s.middle);
        },
        py::arg("graph"), py::arg("x"), py::arg("y"));
    m.def(
        "is_reflective",
        [](const Graph& g, unsigned threads) {
            return is_reflective(g, all_pairs(g), threads).reflective;
        },
        py::arg("graph"), py::arg("threads") = 0);
    m.def(
        "reflectivity_report_json",
        [](const Graph& g, unsigned threads) {
            return reflectivity_report_json(is_reflective(g, all_pairs(g), threads));
        },
        py::arg("graph"), py::arg("threads") = 0);
    m.def(
        "check_sharpness",
        [](const Graph& g, unsigned threads) {
            const DistanceData dd = all_pairs(g);
            return check_sharpness(g, dd, curvature_all_edges(g, dd, threads)).sharp;
        },
        py::arg("graph"), py::arg("threads") = 0);

    m.def(
        "analyze_json",
        [](const Graph& g, bool reflective, unsigned reflective_cap, unsigned threads,
           bool with_float) {
            const AnalysisOptions options =
                make_options(reflective, reflective_cap, threads, with_float);
            return analysis_report_json(g, analyze(g, options), options);
        },
        py::arg("graph"), py::arg("reflective") = true, py::arg("reflective_cap") = 500,
        py::arg("threads") = 0, py::arg("with_float") = false);

    m.def(
        "fuzz_json",
        [](std::size_t count, std::uint64_t seed, VertexId n_min, VertexId n_max, double p_min,
           double p_max, unsigned threads) {
            FuzzOptions options;
            options.count = count;
            options.seed = seed;
            options.n_min = n_min;
            options.n_max = n_max;
            options.p_min = p_min;
            options.p_max = p_max;
            options.threads = threads;
            return fuzz_report_json(options, fuzz_inequality(options));
        },
        py::arg("count") = 200, py::arg("seed") = 42, py::arg("n_min") = 4, py::arg("n_max") = 24,
        py::arg("p_min") = 0.2, py::arg("p_max") = 0.8, py::arg("threads") = 0);

#ifdef GRAPHCURV_VERSION
    m.attr("__version__") = GRAPHCURV_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
