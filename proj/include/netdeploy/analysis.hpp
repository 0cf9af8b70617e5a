#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netdeploy/simulate.hpp"

namespace netdeploy {

/// Per-step adoption increments of a growth curve, possibly smoothed.
/// `window` records the moving-average width applied (1 = raw).
struct RateSeries {
    std::vector<double> rates;
    std::uint32_t window = 1;
};

/// First differences of the adopted counts.
RateSeries growth_rate(const GrowthCurve& curve);

/// Centered moving average; the ends are padded by edge replication, so the
/// output has the same length as the input.
RateSeries smooth(const RateSeries& series, std::uint32_t window);

/// Local maxima whose topographic prominence (height above the higher of
/// the two flanking minima, walking out to the nearest strictly higher
/// point or the series end) exceeds prominence_fraction times the global
/// maximum rate.
std::size_t count_bursts(const RateSeries& series, double prominence_fraction);

/// True when the rate dips before its peak: some interior local minimum
/// t_min earlier than argmax with rate(t_min) < 0.9 * rate(0) and
/// rate(t_min) < 0.5 * max(rate).
bool detect_early_flattening(const RateSeries& series);

/// Smallest t with counts[t] >= ceil(fraction * node_count); absent when
/// the curve never gets there.
std::optional<std::uint64_t> saturation_step(const GrowthCurve& curve, double fraction);

struct AnalysisOptions {
    std::uint32_t window = 11;
    double prominence_fraction = 0.25;
};

/// Shape features of an ensemble, one curve per run.
struct FeatureReport {
    std::string label;
    std::size_t runs = 0;
    std::uint32_t window = 11;
    double prominence_fraction = 0.25;
    std::map<std::size_t, std::size_t> burst_count_distribution;
    double flattening_frequency = 0.0;   // over runs that reached the stop fraction
    std::size_t flattening_eligible_runs = 0;
    std::size_t non_terminated_runs = 0;
    std::optional<std::uint64_t> saturation_p25;
    std::optional<std::uint64_t> saturation_p50;
    std::optional<std::uint64_t> saturation_p75;

    std::string to_json(int indent = -1) const;
};

FeatureReport analyze_runs(std::span<const RunResult> runs, double stop_fraction,
                           const AnalysisOptions& options, const std::string& label);

} // namespace netdeploy
