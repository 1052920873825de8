#include "graphcurv/analysis.hpp"

#include "graphcurv/graph.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace graphcurv;

TEST_CASE("worked reports") {
    const AnalysisReport q3 = analyze(gen_hypercube(3));
    CHECK(q3.avg_curvature_weighted == Rational(2));
    CHECK(q3.avg_distance == Rational(3, 2));
    CHECK(q3.avg_degree == Rational(3));
    CHECK(q3.slack == 0);
    CHECK(q3.equality);
    CHECK(q3.sharp);
    REQUIRE(q3.reflective.has_value());
    CHECK(*q3.reflective);
    CHECK(q3.diameter == 3);
    CHECK(q3.regular);

    const AnalysisReport c5 = analyze(gen_cycle(5));
    CHECK(c5.avg_curvature_weighted == Rational(1));
    CHECK(c5.avg_distance == Rational(6, 5));
    CHECK(c5.avg_degree == Rational(2));
    CHECK(c5.slack == Rational(4, 5));
    CHECK(!c5.equality);
    CHECK(!c5.sharp);
    CHECK(!*c5.reflective);

    const AnalysisReport p3 = analyze(gen_path(3));
    CHECK(p3.avg_degree == Rational(4, 3));
    CHECK(p3.avg_distance == Rational(8, 9));
    CHECK(p3.slack == Rational(4, 9));
    CHECK(!p3.regular);
}

TEST_CASE("equality matches sharpness on a mixed corpus") {
    const std::vector<Graph> corpus = {
        gen_complete(4),
        gen_cycle(5),
        gen_cycle(6),
        gen_path(5),
        gen_hypercube(3),
        gen_cocktail_party(3),
        gen_johnson(4, 2),
        cartesian_product(gen_complete(3), gen_complete(2)),
        gen_erdos_renyi_connected(10, 0.5, 77),
    };
    for (const Graph& g : corpus) {
        const AnalysisReport report = analyze(g);
        CHECK(report.slack >= 0);
        CHECK(report.equality == report.sharp);
        if (report.reflective.has_value()) {
            // Equality and reflectivity coincide on this corpus.
            CHECK(report.equality == *report.reflective);
        }
    }
}

TEST_CASE("report JSON shape") {
    const Graph k4 = gen_complete(4);
    AnalysisOptions options;
    const std::string json = analysis_report_json(k4, analyze(k4, options), options);
    CHECK(json.find("\"slack\": \"0/1\"") != std::string::npos);
    CHECK(json.find("\"equality\": true") != std::string::npos);
    CHECK(json.find("\"ric\": \"4/1\"") != std::string::npos);
    // Pinned key order.
    const std::vector<std::string> keys = {
        "\"n\"",      "\"m\"",        "\"avg_degree\"", "\"avg_distance\"",
        "\"avg_curvature_weighted\"", "\"product\"",    "\"slack\"",
        "\"equality\"", "\"sharp\"",  "\"reflective\"", "\"edges\"",
    };
    std::size_t last = 0;
    for (const auto& key : keys) {
        const std::size_t pos = json.find(key);
        REQUIRE(pos != std::string::npos);
        CHECK(pos >= last);
        last = pos;
    }
    CHECK(json.find("\"approx\"") == std::string::npos);

    AnalysisOptions with_float = options;
    with_float.with_float = true;
    const std::string fl = analysis_report_json(k4, analyze(k4, with_float), with_float);
    CHECK(fl.find("\"approx\"") != std::string::npos);
    CHECK(fl.find("\"slack\": \"0/1\"") != std::string::npos);  // exact fields stay
}

TEST_CASE("reflectivity size gate") {
    AnalysisOptions options;
    options.reflective_cap = 4;
    const AnalysisReport gated = analyze(gen_hypercube(3), options);
    CHECK(!gated.reflective.has_value());

    options.compute_reflective = false;
    options.reflective_cap = 500;
    const AnalysisReport off = analyze(gen_complete(3), options);
    CHECK(!off.reflective.has_value());
    const std::string json = analysis_report_json(gen_complete(3), off, options);
    CHECK(json.find("\"reflective\": null") != std::string::npos);
}

TEST_CASE("reports are byte-identical across worker counts") {
    const Graph g = cartesian_product(gen_johnson(4, 2), gen_complete(2));
    AnalysisOptions one;
    one.threads = 1;
    AnalysisOptions many;
    many.threads = 4;
    CHECK(analysis_report_json(g, analyze(g, one), one) ==
          analysis_report_json(g, analyze(g, many), many));
}

TEST_CASE("analysis rejects unusable inputs") {
    CHECK_THROWS_WITH_AS(analyze(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                         doctest::Contains("unreachable"), GraphError);
    CHECK_THROWS_WITH_AS(analyze(gen_path(1)), doctest::Contains("no edges"), GraphError);
}

TEST_CASE("per-edge CSV") {
    const Graph p3 = gen_path(3);
    const std::string csv = analysis_report_csv(p3, analyze(p3));
    CHECK(csv == "u,v,g_num,g_den,ric_num,ric_den\n0,1,4,9,1,1\n1,2,4,9,1,1\n");
}

TEST_CASE("fuzz campaign") {
    FuzzOptions empty;
    empty.count = 0;
    const FuzzReport none = fuzz_inequality(empty);
    CHECK(none.count == 0);
    CHECK(none.violations == 0);
    CHECK(!none.min_slack.has_value());
    CHECK(!none.median_slack.has_value());

    FuzzOptions small;
    small.count = 25;
    small.seed = 7;
    small.n_min = 4;
    small.n_max = 14;
    const FuzzReport report = fuzz_inequality(small);
    CHECK(report.count == 25);
    CHECK(report.violations == 0);
    REQUIRE(report.min_slack.has_value());
    CHECK(*report.min_slack >= 0);
    CHECK(*report.median_slack >= *report.min_slack);
    for (const auto& hit : report.equality_hits) {
        CHECK(hit.reflective);  // equality forces reflectivity
    }

    // Deterministic campaign for a fixed seed.
    CHECK(fuzz_report_json(small, report) == fuzz_report_json(small, fuzz_inequality(small)));
}

TEST_CASE("sharpness report JSON") {
    const Graph c5 = gen_cycle(5);
    const DistanceData dd = all_pairs(c5);
    const auto report = check_sharpness(c5, dd, curvature_all_edges(c5, dd));
    const std::string json = sharpness_report_json(report);
    CHECK(json.find("\"sharp\": false") != std::string::npos);
    CHECK(json.find("\"violation\"") != std::string::npos);
    CHECK(json.find("\"ric\": \"1/1\"") != std::string::npos);
}

TEST_CASE("reflectivity report JSON") {
    const Graph c4 = gen_cycle(4);
    const std::string json = reflectivity_report_json(is_reflective(c4, all_pairs(c4)));
    CHECK(json.find("\"reflective\": true") != std::string::npos);
    CHECK(json.find("\"phi\"") != std::string::npos);
}
