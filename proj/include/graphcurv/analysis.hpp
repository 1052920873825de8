#pragma once

#include "graphcurv/curvature.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/metrics.hpp"
#include "graphcurv/rigidity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphcurv {

struct AnalysisOptions {
    bool compute_reflective = true;
    /// Reflectivity verification is quadratic-ish per edge; skip it above
    /// this vertex count unless the caller raises the cap.
    std::uint32_t reflective_cap = 500;
    unsigned threads = 0;  // 0 = hardware concurrency
    bool with_edge_table = true;
    bool with_float = false;  // adds decimal approximations to the JSON report
};

struct AnalysisReport {
    VertexId n = 0;
    std::size_t m = 0;
    bool regular = false;
    int diameter = 0;
    Rational avg_degree;
    Rational avg_distance;
    Rational avg_curvature_weighted;
    Rational product;  // avg_curvature_weighted * avg_distance
    Rational slack;    // avg_degree - product; never negative on valid input
    bool equality = false;
    bool sharp = false;
    std::optional<bool> reflective;  // empty when skipped by the size gate
    EdgeMeasure betweenness;
    EdgeMeasure curvature;
};

/// Full pipeline with exact arithmetic. Throws GraphError on a disconnected
/// or edgeless input (a single vertex has no edge to average curvature over).
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

/// Fixed key order, rationals as "num/den" strings; byte-stable across runs
/// and worker counts.
std::string analysis_report_json(const Graph& g, const AnalysisReport& report,
                                 const AnalysisOptions& options = {});

/// Per-edge table "u,v,g_num,g_den,ric_num,ric_den".
std::string analysis_report_csv(const Graph& g, const AnalysisReport& report);

std::string reflectivity_report_json(const ReflectivityReport& report);
std::string sharpness_report_json(const SharpnessReport& report);

struct FuzzOptions {
    std::size_t count = 200;
    VertexId n_min = 4;
    VertexId n_max = 24;
    double p_min = 0.2;
    double p_max = 0.8;
    std::uint64_t seed = 42;
    unsigned threads = 0;
};

struct FuzzEqualityHit {
    std::size_t index = 0;
    VertexId n = 0;
    std::size_t m = 0;
    bool reflective = false;
};

struct FuzzReport {
    std::size_t count = 0;
    std::size_t violations = 0;  // slack < 0 occurrences; must stay zero
    std::optional<Rational> min_slack;
    std::optional<Rational> median_slack;
    std::vector<FuzzEqualityHit> equality_hits;
};

/// Random connected graphs, exact analysis for each, slack checked exactly.
/// Equality hits are re-checked for reflectivity.
FuzzReport fuzz_inequality(const FuzzOptions& options = {});

std::string fuzz_report_json(const FuzzOptions& options, const FuzzReport& report);

}  // namespace graphcurv
