#include "graphcurv/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace graphcurv {

using ordered_json = nlohmann::ordered_json;

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
    if (g.num_edges() == 0) {
        throw GraphError("analyze: graph has no edges, the weighted curvature average is undefined");
    }
    const DistanceData dd = all_pairs(g);  // also rejects disconnected inputs

    AnalysisReport report;
    report.n = g.num_vertices();
    report.m = g.num_edges();
    report.regular = g.is_regular();
    report.diameter = dd.diameter();
    report.avg_degree = average_degree(g);
    report.avg_distance = average_distance(g, dd);
    report.betweenness = edge_betweenness(g, options.threads);
    report.curvature = curvature_all_edges(g, dd, options.threads);
    report.avg_curvature_weighted =
        average_curvature_weighted(g, report.betweenness, report.curvature);
    report.product = report.avg_curvature_weighted * report.avg_distance;
    report.slack = report.avg_degree - report.product;
    report.equality = report.slack == 0;
    report.sharp = check_sharpness(g, dd, report.curvature).sharp;
    if (options.compute_reflective && g.num_vertices() <= options.reflective_cap) {
        report.reflective = is_reflective(g, dd, options.threads).reflective;
    }
    return report;
}

std::string analysis_report_json(const Graph& g, const AnalysisReport& report,
                                 const AnalysisOptions& options) {
    ordered_json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["avg_degree"] = to_fraction_string(report.avg_degree);
    j["avg_distance"] = to_fraction_string(report.avg_distance);
    j["avg_curvature_weighted"] = to_fraction_string(report.avg_curvature_weighted);
    j["product"] = to_fraction_string(report.product);
    j["slack"] = to_fraction_string(report.slack);
    j["equality"] = report.equality;
    j["sharp"] = report.sharp;
    if (report.reflective.has_value()) {
        j["reflective"] = *report.reflective;
    } else {
        j["reflective"] = nullptr;
    }
    if (options.with_edge_table) {
        ordered_json edges = ordered_json::array();
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            ordered_json entry;
            entry["u"] = e.u;
            entry["v"] = e.v;
            entry["g"] = to_fraction_string(report.betweenness.values[i]);
            entry["ric"] = to_fraction_string(report.curvature.values[i]);
            edges.push_back(std::move(entry));
        }
        j["edges"] = std::move(edges);
    } else {
        j["edges"] = ordered_json::array();
    }
    if (options.with_float) {
        // Decimal approximations are additive; the exact fields stay.
        ordered_json approx;
        approx["avg_degree"] = to_double(report.avg_degree);
        approx["avg_distance"] = to_double(report.avg_distance);
        approx["avg_curvature_weighted"] = to_double(report.avg_curvature_weighted);
        approx["product"] = to_double(report.product);
        approx["slack"] = to_double(report.slack);
        j["approx"] = std::move(approx);
    }
    return j.dump(2) + "\n";
}

std::string analysis_report_csv(const Graph& g, const AnalysisReport& report) {
    std::string out = "u,v,g_num,g_den,ric_num,ric_den\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        out += std::to_string(e.u) + ',' + std::to_string(e.v) + ',' +
               numerator(report.betweenness.values[i]).str() + ',' +
               denominator(report.betweenness.values[i]).str() + ',' +
               numerator(report.curvature.values[i]).str() + ',' +
               denominator(report.curvature.values[i]).str() + '\n';
    }
    return out;
}

std::string reflectivity_report_json(const ReflectivityReport& report) {
    ordered_json j;
    j["reflective"] = report.reflective;
    ordered_json edges = ordered_json::array();
    for (const EdgeReflectivity& e : report.per_edge) {
        ordered_json entry;
        entry["u"] = e.edge.u;
        entry["v"] = e.edge.v;
        entry["ok"] = e.ok;
        if (e.ok) {
            entry["failure"] = nullptr;
            entry["phi"] = e.phi;
        } else {
            entry["failure"] = e.failure;
            entry["phi"] = nullptr;
        }
        edges.push_back(std::move(entry));
    }
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

std::string sharpness_report_json(const SharpnessReport& report) {
    ordered_json j;
    j["sharp"] = report.sharp;
    if (report.violation.has_value()) {
        ordered_json v;
        v["z"] = report.violation->z;
        v["x"] = report.violation->x;
        v["y"] = report.violation->y;
        v["laplacian_difference"] = report.violation->laplacian_difference;
        v["ric"] = to_fraction_string(report.violation->ric);
        j["violation"] = std::move(v);
    } else {
        j["violation"] = nullptr;
    }
    return j.dump(2) + "\n";
}

namespace {

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Rejection sampling keeps the draw identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        const std::uint64_t draw = rng();
        if (draw < limit) {
            return draw % bound;
        }
    }
}

}  // namespace

FuzzReport fuzz_inequality(const FuzzOptions& options) {
    if (options.n_min < 2 || options.n_max < options.n_min) {
        throw GraphError("fuzz_inequality: invalid vertex range");
    }
    FuzzReport report;
    report.count = options.count;
    std::mt19937_64 rng(options.seed);
    std::vector<Rational> slacks;
    slacks.reserve(options.count);
    AnalysisOptions analysis_options;
    analysis_options.compute_reflective = false;  // only re-check equality hits
    analysis_options.threads = options.threads;
    analysis_options.with_edge_table = false;
    for (std::size_t i = 0; i < options.count; ++i) {
        const VertexId n = options.n_min +
                           static_cast<VertexId>(uniform_below(
                               rng, static_cast<std::uint64_t>(options.n_max - options.n_min) + 1));
        const double p = options.p_min + (options.p_max - options.p_min) * uniform_unit(rng);
        const std::uint64_t graph_seed = rng();
        const Graph g = gen_erdos_renyi_connected(n, p, graph_seed);
        const AnalysisReport analysis = analyze(g, analysis_options);
        slacks.push_back(analysis.slack);
        if (analysis.slack < 0) {
            ++report.violations;
        }
        if (analysis.equality) {
            const bool reflective = is_reflective(g, all_pairs(g), options.threads).reflective;
            report.equality_hits.push_back(FuzzEqualityHit{i, g.num_vertices(), g.num_edges(),
                                                           reflective});
        }
    }
    if (!slacks.empty()) {
        std::vector<Rational> sorted = slacks;
        std::sort(sorted.begin(), sorted.end());
        report.min_slack = sorted.front();
        const std::size_t half = sorted.size() / 2;
        if (sorted.size() % 2 == 1) {
            report.median_slack = sorted[half];
        } else {
            report.median_slack = (sorted[half - 1] + sorted[half]) / 2;
        }
    }
    return report;
}

std::string fuzz_report_json(const FuzzOptions& options, const FuzzReport& report) {
    ordered_json j;
    j["count"] = report.count;
    j["n_range"] = {options.n_min, options.n_max};
    j["p_range"] = {options.p_min, options.p_max};
    j["seed"] = options.seed;
    j["violations"] = report.violations;
    j["min_slack"] =
        report.min_slack ? ordered_json(to_fraction_string(*report.min_slack)) : ordered_json();
    j["median_slack"] = report.median_slack ? ordered_json(to_fraction_string(*report.median_slack))
                                            : ordered_json();
    ordered_json hits = ordered_json::array();
    for (const FuzzEqualityHit& hit : report.equality_hits) {
        ordered_json entry;
        entry["index"] = hit.index;
        entry["n"] = hit.n;
        entry["m"] = hit.m;
        entry["reflective"] = hit.reflective;
        hits.push_back(std::move(entry));
    }
    j["equality_hits"] = std::move(hits);
    return j.dump(2) + "\n";
}

}  // namespace graphcurv
