#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "netdeploy/analysis.hpp"

using namespace netdeploy;

namespace {

GrowthCurve curve_of(std::vector<std::uint32_t> counts, NodeId n) {
    GrowthCurve curve;
    curve.counts = std::move(counts);
    curve.node_count = n;
    return curve;
}

RateSeries series_of(std::vector<double> rates, std::uint32_t window = 1) {
    RateSeries series;
    series.rates = std::move(rates);
    series.window = window;
    return series;
}

} // namespace

TEST_CASE("growth_rate is the first difference") {
    CHECK(growth_rate(curve_of({1, 2, 4, 8}, 10)).rates == std::vector<double>{1, 2, 4});
    CHECK(growth_rate(curve_of({5, 5, 5}, 10)).rates == std::vector<double>{0, 0});
    CHECK_THROWS_AS(growth_rate(curve_of({1}, 10)), std::invalid_argument);
    CHECK_THROWS_AS(growth_rate(curve_of({5, 3}, 10)), std::invalid_argument);

    // telescoping: rates sum to last - first
    const GrowthCurve curve = curve_of({1, 7, 7, 30, 44, 90}, 100);
    const RateSeries rates = growth_rate(curve);
    CHECK(std::accumulate(rates.rates.begin(), rates.rates.end(), 0.0) == 89.0);
}

TEST_CASE("smooth: centered average with edge replication") {
    // hand-evaluated: (0+0+3)/3, (0+3+0)/3, (3+0+0)/3
    CHECK(smooth(series_of({0, 3, 0}), 3).rates == std::vector<double>{1, 1, 1});
    // replicated edges weigh in: (6+6+0)/3, (6+0+0)/3, (0+0+0)/3
    CHECK(smooth(series_of({6, 0, 0}), 3).rates == std::vector<double>{4, 2, 0});
    CHECK(smooth(series_of({4, 4, 4, 4}), 3).rates == std::vector<double>{4, 4, 4, 4});
    CHECK(smooth(series_of({1, 5, 9}), 1).rates == std::vector<double>{1, 5, 9});
    CHECK_THROWS_AS(smooth(series_of({1, 2, 3}), 2), std::invalid_argument);
    CHECK_THROWS_AS(smooth(series_of({1, 2, 3}), 5), std::invalid_argument);
    CHECK(smooth(series_of({0, 3, 0}), 3).window == 3);
}

TEST_CASE("smooth approximately preserves the mean") {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> value(0.0, 50.0);
    std::vector<double> rates(200);
    for (double& r : rates) r = value(gen);
    const double raw_mean = std::accumulate(rates.begin(), rates.end(), 0.0) / rates.size();
    for (const std::uint32_t window : {3u, 11u, 31u}) {
        const auto smoothed = smooth(series_of(rates), window).rates;
        const double mean = std::accumulate(smoothed.begin(), smoothed.end(), 0.0) / smoothed.size();
        const double bias_bound = window * 50.0 / rates.size();
        CHECK(std::abs(mean - raw_mean) <= bias_bound);
    }
}

TEST_CASE("count_bursts on synthetic shapes") {
    CHECK(count_bursts(series_of({0, 5, 10, 5, 0}), 0.2) == 1);
    CHECK(count_bursts(series_of({2, 2, 2, 2, 2}), 0.2) == 0);

    // two equal bumps split by a deep valley; by hand each peak's
    // prominence is 10 - max(0, 1) = 9 > 0.2 * 10
    CHECK(count_bursts(series_of({0, 5, 10, 5, 1, 5, 10, 5, 0}), 0.2) == 2);

    // shallow second ripple: prominence 2 fails at 0.25, passes at 0.1
    const std::vector<double> ripple{0, 10, 20, 10, 18, 20, 18, 0};
    CHECK(count_bursts(series_of(ripple), 0.25) == 2);  // both are prominent vs flanks

    // plateau peak counts once
    CHECK(count_bursts(series_of({0, 5, 5, 5, 0}), 0.2) == 1);

    // monotone series has no interior maxima
    CHECK(count_bursts(series_of({0, 1, 2, 3, 4}), 0.2) == 0);

    CHECK_THROWS_AS(count_bursts(series_of({1, 2, 1}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(count_bursts(series_of({1, 2, 1}), 1.0), std::invalid_argument);
}

TEST_CASE("count_bursts prominence actually gates") {
    // small bump (height 3) riding next to a big one (height 20): the
    // valley between them is at 2, so its prominence is 1.
    const std::vector<double> rates{0, 20, 2, 3, 2, 0};
    CHECK(count_bursts(series_of(rates), 0.25) == 1);
    CHECK(count_bursts(series_of(rates), 0.04) == 2);
}

TEST_CASE("count_bursts is scale invariant and monotone in the threshold") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> value(0.0, 1.0);
    std::vector<double> rates(120);
    for (double& r : rates) r = value(gen);
    const RateSeries series = series_of(rates);

    for (const double scale : {0.01, 3.0, 1e6}) {
        std::vector<double> scaled = rates;
        for (double& r : scaled) r *= scale;
        CHECK(count_bursts(series_of(scaled), 0.25) == count_bursts(series, 0.25));
    }

    std::size_t previous = SIZE_MAX;
    for (const double fraction : {0.05, 0.1, 0.25, 0.5, 0.9}) {
        const std::size_t bursts = count_bursts(series, fraction);
        CHECK(bursts <= previous);
        previous = bursts;
    }
}

TEST_CASE("detect_early_flattening") {
    // dip at index 2 (value 2) before the peak at 20; 2 < 0.9*4 and 2 < 10
    CHECK(detect_early_flattening(series_of({4, 3, 2, 3, 8, 20, 8, 2})));
    // monotone increasing rate: no interior minimum
    CHECK_FALSE(detect_early_flattening(series_of({1, 2, 3, 4, 5})));
    // dip not deep enough relative to the start
    CHECK_FALSE(detect_early_flattening(series_of({4, 3.8, 3.9, 8, 20, 8})));
    // dip before anything resembling a later peak
    CHECK_FALSE(detect_early_flattening(series_of({10, 4, 3, 2, 1})));
    // shallow-vs-max condition: minimum must undercut half the peak
    CHECK_FALSE(detect_early_flattening(series_of({10, 8, 9, 12, 9, 2})));
    CHECK(detect_early_flattening(series_of({10, 5, 9, 12, 9, 2})));
}

TEST_CASE("saturation_step") {
    const GrowthCurve curve = curve_of({1, 50, 100}, 100);
    CHECK(saturation_step(curve, 0.99) == 2);
    CHECK(saturation_step(curve, 0.0) == 0);
    CHECK(saturation_step(curve, 0.5) == 1);
    CHECK(saturation_step(curve_of({1, 50, 98}, 100), 0.99) == std::nullopt);
    CHECK_THROWS_AS(saturation_step(curve, 1.5), std::invalid_argument);

    // monotone in the fraction
    const GrowthCurve long_curve = curve_of({1, 5, 17, 40, 77, 96, 100}, 100);
    std::uint64_t previous = 0;
    for (const double fraction : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        const auto step_at = saturation_step(long_curve, fraction);
        REQUIRE(step_at.has_value());
        CHECK(*step_at >= previous);
        previous = *step_at;
    }
}

TEST_CASE("analyze_runs aggregates per-run features") {
    // Two synthetic runs: a clean S-curve that saturates and a stalled run.
    RunResult s_curve;
    s_curve.reached_stop = true;
    s_curve.curve.node_count = 100;
    s_curve.curve.counts = {1, 2, 4, 8, 16, 32, 60, 85, 95, 99, 100};
    RunResult stalled;
    stalled.reached_stop = false;
    stalled.curve.node_count = 100;
    stalled.curve.counts = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};

    const std::vector<RunResult> runs{s_curve, stalled};
    const FeatureReport report = analyze_runs(runs, 0.99, {3, 0.25}, "synthetic");
    CHECK(report.runs == 2);
    CHECK(report.non_terminated_runs == 1);
    CHECK(report.flattening_eligible_runs == 1);
    CHECK(report.flattening_frequency >= 0.0);
    CHECK(report.flattening_frequency <= 1.0);
    CHECK(report.saturation_p50 == 9);

    std::size_t total_runs = 0;
    for (const auto& [bursts, count] : report.burst_count_distribution) total_runs += count;
    CHECK(total_runs == 2);

    const std::string json = report.to_json(2);
    CHECK(json.find("\"flattening_frequency\"") != std::string::npos);
    CHECK(json.find("\"burst_count_distribution\"") != std::string::npos);
    CHECK(json.find("\"preset\": \"synthetic\"") != std::string::npos);
}
