// Command-line front end: generate family graphs, run the full analysis
// (betweenness, curvature, the average-distance bound, sharpness,
// reflectivity), and fuzz the inequality on random connected graphs.
//
// Exit codes: 0 success, 1 invariant violation (a negative slack would
// contradict the distance bound and is treated as a bug), 2 usage or input
// errors.

#include "graphcurv/analysis.hpp"
#include "graphcurv/curvature.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/metrics.hpp"
#include "graphcurv/rigidity.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace graphcurv;

constexpr int kExitOk = 0;
constexpr int kExitInvariantViolation = 1;
constexpr int kExitUsage = 2;

struct FamilySpec {
    std::string name;
    unsigned n = 0;
    unsigned k = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
};

Graph build_family(const FamilySpec& spec) {
    const std::string& f = spec.name;
    if (f == "complete") {
        return gen_complete(spec.n);
    }
    if (f == "cycle") {
        return gen_cycle(spec.n);
    }
    if (f == "path") {
        return gen_path(spec.n);
    }
    if (f == "hypercube") {
        return gen_hypercube(spec.n);
    }
    if (f == "cocktail") {
        return gen_cocktail_party(spec.n);
    }
    if (f == "johnson") {
        return gen_johnson(spec.n, spec.k);
    }
    if (f == "halved-cube") {
        return gen_halved_cube(spec.n);
    }
    if (f == "schlafli") {
        return gen_schlafli();
    }
    if (f == "gosset") {
        return gen_gosset();
    }
    if (f == "er") {
        return gen_erdos_renyi_connected(spec.n, spec.p, spec.seed);
    }
    throw GraphError("unknown family '" + f +
                     "' (expected complete, cycle, path, hypercube, cocktail, johnson, "
                     "halved-cube, schlafli, gosset, er)");
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_edge_list(buffer.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw GraphError("cannot write '" + path + "'");
    }
    out << content;
}

Graph resolve_input(const std::string& file, const FamilySpec& family) {
    if (!family.name.empty()) {
        return build_family(family);
    }
    if (file.empty()) {
        throw GraphError("no input: give an edge-list file or --family");
    }
    return load_graph_file(file);
}

void print_human_report(const Graph& g, const AnalysisReport& r) {
    std::cout << "vertices            " << r.n << "\n"
              << "edges               " << r.m << "\n"
              << "regular             " << (r.regular ? "yes" : "no") << "\n"
              << "diameter            " << r.diameter << "\n"
              << "avg degree          " << to_fraction_string(r.avg_degree) << "\n"
              << "avg distance        " << to_fraction_string(r.avg_distance) << "\n"
              << "avg curvature (g)   " << to_fraction_string(r.avg_curvature_weighted) << "\n"
              << "curvature * dist    " << to_fraction_string(r.product) << "\n"
              << "slack               " << to_fraction_string(r.slack) << "\n"
              << "equality            " << (r.equality ? "yes" : "no") << "\n"
              << "sharp               " << (r.sharp ? "yes" : "no") << "\n";
    if (r.reflective.has_value()) {
        std::cout << "reflective          " << (*r.reflective ? "yes" : "no") << "\n";
    } else {
        std::cout << "reflective          skipped (size gate)\n";
    }
    (void)g;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact curvature / betweenness / average-distance analytics for graphs"};
    app.require_subcommand(1);

    FamilySpec family;
    auto add_family_options = [&](CLI::App* cmd) {
        cmd->add_option("--family", family.name, "generate the input instead of reading a file");
        cmd->add_option("--n", family.n, "family size parameter");
        cmd->add_option("--k", family.k, "subset size (johnson)");
        cmd->add_option("--p", family.p, "edge probability (er)");
        cmd->add_option("--seed", family.seed, "random seed (er)");
    };

    // generate
    auto* generate = app.add_subcommand("generate", "write a family graph as an edge list");
    std::string generate_family;
    std::string generate_out;
    generate->add_option("family", generate_family, "family name")->required();
    generate->add_option("-o,--output", generate_out, "output file (default stdout)");
    generate->add_option("--n", family.n, "family size parameter");
    generate->add_option("--k", family.k, "subset size (johnson)");
    generate->add_option("--p", family.p, "edge probability (er)");
    generate->add_option("--seed", family.seed, "random seed (er)");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "full report for a graph");
    std::string analyze_file;
    bool analyze_json = false;
    bool analyze_csv = false;
    bool no_reflective = false;
    bool with_float = false;
    unsigned reflective_cap = 500;
    unsigned threads = 0;
    analyze_cmd->add_option("file", analyze_file, "edge-list file");
    add_family_options(analyze_cmd);
    analyze_cmd->add_flag("--json", analyze_json, "emit the JSON report");
    analyze_cmd->add_flag("--csv", analyze_csv, "emit the per-edge table as CSV");
    analyze_cmd->add_flag("--no-reflective", no_reflective, "skip the reflectivity decision");
    analyze_cmd->add_flag("--float", with_float, "add decimal approximations to the JSON report");
    analyze_cmd->add_option("--reflective-cap", reflective_cap,
                            "vertex-count gate for reflectivity (default 500)");
    analyze_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    // curvature
    auto* curvature_cmd = app.add_subcommand("curvature", "per-edge Ollivier curvature");
    std::string curvature_file;
    bool curvature_json = false;
    curvature_cmd->add_option("file", curvature_file, "edge-list file");
    add_family_options(curvature_cmd);
    curvature_cmd->add_flag("--json", curvature_json, "emit JSON instead of CSV");
    curvature_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    // betweenness
    auto* betweenness_cmd = app.add_subcommand("betweenness", "per-edge betweenness centrality");
    std::string betweenness_file;
    bool betweenness_json = false;
    bool betweenness_approx = false;
    betweenness_cmd->add_option("file", betweenness_file, "edge-list file");
    add_family_options(betweenness_cmd);
    betweenness_cmd->add_flag("--json", betweenness_json, "emit JSON instead of CSV");
    betweenness_cmd->add_flag("--approx", betweenness_approx,
                              "floating-point fast path (large graphs)");
    betweenness_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    // reflective
    auto* reflective_cmd = app.add_subcommand("reflective", "per-edge reflection report");
    std::string reflective_file;
    reflective_cmd->add_option("file", reflective_file, "edge-list file");
    add_family_options(reflective_cmd);
    reflective_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    // sharpness
    auto* sharpness_cmd = app.add_subcommand("sharpness", "sharpness decision with witness");
    std::string sharpness_file;
    sharpness_cmd->add_option("file", sharpness_file, "edge-list file");
    add_family_options(sharpness_cmd);
    sharpness_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    // fuzz
    auto* fuzz_cmd = app.add_subcommand("fuzz", "inequality campaign on random connected graphs");
    FuzzOptions fuzz_options;
    bool fuzz_json = false;
    fuzz_cmd->add_option("--count", fuzz_options.count, "number of graphs");
    fuzz_cmd->add_option("--seed", fuzz_options.seed, "campaign seed");
    fuzz_cmd->add_option("--n-min", fuzz_options.n_min, "minimum vertex count");
    fuzz_cmd->add_option("--n-max", fuzz_options.n_max, "maximum vertex count");
    fuzz_cmd->add_option("--p-min", fuzz_options.p_min, "minimum edge probability");
    fuzz_cmd->add_option("--p-max", fuzz_options.p_max, "maximum edge probability");
    fuzz_cmd->add_option("--threads", fuzz_options.threads, "worker threads (0 = hardware)");
    fuzz_cmd->add_flag("--json", fuzz_json, "emit the JSON campaign report");

    // product
    auto* product_cmd = app.add_subcommand("product", "Cartesian product of two edge lists");
    std::string product_a;
    std::string product_b;
    std::string product_out;
    product_cmd->add_option("fileA", product_a, "first factor")->required();
    product_cmd->add_option("fileB", product_b, "second factor")->required();
    product_cmd->add_option("-o,--output", product_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) {
            family.name = generate_family;
            const Graph g = build_family(family);
            const std::string text = write_edge_list(g);
            if (generate_out.empty()) {
                std::cout << text;
            } else {
                write_file(generate_out, text);
            }
            return kExitOk;
        }

        if (*analyze_cmd) {
            const Graph g = resolve_input(analyze_file, family);
            AnalysisOptions options;
            options.compute_reflective = !no_reflective;
            options.reflective_cap = reflective_cap;
            options.threads = threads;
            options.with_float = with_float;
            const AnalysisReport report = analyze(g, options);
            if (analyze_json) {
                std::cout << analysis_report_json(g, report, options);
            } else if (analyze_csv) {
                std::cout << analysis_report_csv(g, report);
            } else {
                print_human_report(g, report);
            }
            if (report.slack < 0) {
                std::cerr << "invariant violation: negative slack "
                          << to_fraction_string(report.slack) << "\n";
                return kExitInvariantViolation;
            }
            return kExitOk;
        }

        if (*curvature_cmd) {
            const Graph g = resolve_input(curvature_file, family);
            const EdgeMeasure ric = curvature_all_edges(g, all_pairs(g), threads);
            if (curvature_json) {
                std::cout << "[";
                for (std::size_t i = 0; i < g.edges().size(); ++i) {
                    const Edge& e = g.edges()[i];
                    std::cout << (i ? "," : "") << "\n  {\"u\": " << e.u << ", \"v\": " << e.v
                              << ", \"ric\": \"" << to_fraction_string(ric.values[i]) << "\"}";
                }
                std::cout << "\n]\n";
            } else {
                std::cout << edge_measure_csv(g, ric);
            }
            return kExitOk;
        }

        if (*betweenness_cmd) {
            const Graph g = resolve_input(betweenness_file, family);
            if (betweenness_approx) {
                const auto values = edge_betweenness_approx(g);
                std::cout << "u,v,g\n";
                for (std::size_t i = 0; i < g.edges().size(); ++i) {
                    const Edge& e = g.edges()[i];
                    std::printf("%u,%u,%.17g\n", e.u, e.v, values[i]);
                }
                return kExitOk;
            }
            const EdgeMeasure bc = edge_betweenness(g, threads);
            if (betweenness_json) {
                std::cout << "[";
                for (std::size_t i = 0; i < g.edges().size(); ++i) {
                    const Edge& e = g.edges()[i];
                    std::cout << (i ? "," : "") << "\n  {\"u\": " << e.u << ", \"v\": " << e.v
                              << ", \"g\": \"" << to_fraction_string(bc.values[i]) << "\"}";
                }
                std::cout << "\n]\n";
            } else {
                std::cout << edge_measure_csv(g, bc);
            }
            return kExitOk;
        }

        if (*reflective_cmd) {
            const Graph g = resolve_input(reflective_file, family);
            const ReflectivityReport report = is_reflective(g, all_pairs(g), threads);
            std::cout << reflectivity_report_json(report);
            return kExitOk;
        }

        if (*sharpness_cmd) {
            const Graph g = resolve_input(sharpness_file, family);
            const DistanceData dd = all_pairs(g);
            const EdgeMeasure ric = curvature_all_edges(g, dd, threads);
            std::cout << sharpness_report_json(check_sharpness(g, dd, ric));
            return kExitOk;
        }

        if (*fuzz_cmd) {
            const FuzzReport report = fuzz_inequality(fuzz_options);
            if (fuzz_json) {
                std::cout << fuzz_report_json(fuzz_options, report);
            } else {
                std::cout << "graphs      " << report.count << "\n"
                          << "violations  " << report.violations << "\n";
                if (report.min_slack) {
                    std::cout << "min slack   " << to_fraction_string(*report.min_slack) << "\n"
                              << "median      " << to_fraction_string(*report.median_slack) << "\n";
                }
                std::cout << "equality hits " << report.equality_hits.size() << "\n";
                for (const auto& hit : report.equality_hits) {
                    std::cout << "  graph " << hit.index << " (n=" << hit.n << ", m=" << hit.m
                              << ") reflective=" << (hit.reflective ? "yes" : "no") << "\n";
                }
            }
            return report.violations == 0 ? kExitOk : kExitInvariantViolation;
        }

        if (*product_cmd) {
            const Graph a = load_graph_file(product_a);
            const Graph b = load_graph_file(product_b);
            const std::string text = write_edge_list(cartesian_product(a, b));
            if (product_out.empty()) {
                std::cout << text;
            } else {
                write_file(product_out, text);
            }
            return kExitOk;
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariantViolation;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
