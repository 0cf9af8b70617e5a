#include "netdeploy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace netdeploy {

RateSeries growth_rate(const GrowthCurve& curve) {
    if (curve.counts.size() < 2)
        throw std::invalid_argument("growth_rate: curve needs at least two entries");
    RateSeries series;
    series.rates.reserve(curve.counts.size() - 1);
    for (std::size_t t = 0; t + 1 < curve.counts.size(); ++t) {
        if (curve.counts[t + 1] < curve.counts[t])
            throw std::invalid_argument("growth_rate: curve is not nondecreasing");
        series.rates.push_back(static_cast<double>(curve.counts[t + 1]) -
                               static_cast<double>(curve.counts[t]));
    }
    return series;
}

RateSeries smooth(const RateSeries& series, std::uint32_t window) {
    if (window % 2 == 0) throw std::invalid_argument("smooth: window must be odd");
    if (window > series.rates.size())
        throw std::invalid_argument("smooth: window exceeds series length");
    if (window == 1) return series;

    const auto length = static_cast<std::int64_t>(series.rates.size());
    const std::int64_t half = window / 2;
    std::vector<double> prefix(length + 1, 0.0);
    for (std::int64_t i = 0; i < length; ++i) prefix[i + 1] = prefix[i] + series.rates[i];

    RateSeries out;
    out.window = window;
    out.rates.resize(length);
    for (std::int64_t i = 0; i < length; ++i) {
        const std::int64_t lo = std::max<std::int64_t>(0, i - half);
        const std::int64_t hi = std::min<std::int64_t>(length - 1, i + half);
        double sum = prefix[hi + 1] - prefix[lo];
        sum += static_cast<double>((i - half) < 0 ? half - i : 0) * series.rates.front();
        sum += static_cast<double>((i + half) > length - 1 ? i + half - (length - 1) : 0) *
               series.rates.back();
        out.rates[i] = sum / static_cast<double>(window);
    }
    return out;
}

namespace {

struct Peak {
    std::size_t index;
    double height;
};

// Interior local maxima; a plateau counts once, at its midpoint. Series
// ends never qualify.
std::vector<Peak> find_peaks(const std::vector<double>& values) {
    std::vector<Peak> peaks;
    std::size_t i = 1;
    while (i + 1 < values.size()) {
        if (values[i - 1] < values[i]) {
            std::size_t j = i;
            while (j + 1 < values.size() && values[j + 1] == values[i]) ++j;
            if (j + 1 < values.size() && values[j + 1] < values[i]) {
                peaks.push_back({(i + j) / 2, values[i]});
            }
            i = j + 1;
        } else {
            ++i;
        }
    }
    return peaks;
}

double prominence(const std::vector<double>& values, const Peak& peak) {
    double left_min = peak.height;
    for (std::size_t j = peak.index; j-- > 0;) {
        if (values[j] > peak.height) break;
        left_min = std::min(left_min, values[j]);
    }
    double right_min = peak.height;
    for (std::size_t j = peak.index + 1; j < values.size(); ++j) {
        if (values[j] > peak.height) break;
        right_min = std::min(right_min, values[j]);
    }
    return peak.height - std::max(left_min, right_min);
}

} // namespace

std::size_t count_bursts(const RateSeries& series, double prominence_fraction) {
    if (!(prominence_fraction > 0.0 && prominence_fraction < 1.0))
        throw std::invalid_argument("count_bursts: prominence fraction must lie in (0,1)");
    if (series.rates.size() < 3) return 0;
    const double global_max = *std::max_element(series.rates.begin(), series.rates.end());
    const double threshold = prominence_fraction * global_max;
    std::size_t count = 0;
    for (const Peak& peak : find_peaks(series.rates))
        if (prominence(series.rates, peak) > threshold) ++count;
    return count;
}

bool detect_early_flattening(const RateSeries& series) {
    const auto& rates = series.rates;
    if (rates.size() < 3) return false;
    const std::size_t peak =
        std::max_element(rates.begin(), rates.end()) - rates.begin();
    if (peak < 2) return false;
    std::size_t t_min = 1;
    for (std::size_t t = 1; t < peak; ++t)
        if (rates[t] < rates[t_min]) t_min = t;
    if (rates[t_min] > rates[t_min - 1] || rates[t_min] > rates[t_min + 1]) return false;
    const double global_max = *std::max_element(rates.begin(), rates.end());
    return rates[t_min] < 0.9 * rates.front() && rates[t_min] < 0.5 * global_max;
}

std::optional<std::uint64_t> saturation_step(const GrowthCurve& curve, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw std::invalid_argument("saturation_step: fraction must lie in [0,1]");
    const auto target =
        static_cast<std::uint64_t>(std::ceil(fraction * static_cast<double>(curve.node_count)));
    for (std::size_t t = 0; t < curve.counts.size(); ++t)
        if (curve.counts[t] >= target) return t;
    return std::nullopt;
}

FeatureReport analyze_runs(std::span<const RunResult> runs, double stop_fraction,
                           const AnalysisOptions& options, const std::string& label) {
    FeatureReport report;
    report.label = label;
    report.runs = runs.size();
    report.window = options.window;
    report.prominence_fraction = options.prominence_fraction;

    std::vector<std::uint64_t> saturation;
    std::size_t flattened = 0;
    for (const RunResult& r : runs) {
        // Right-extend at the final value (the trajectory is constant once a
        // run stops) so growth that ends against the stop boundary still
        // presents a full flank to the smoother.
        GrowthCurve extended = r.curve;
        extended.counts.insert(extended.counts.end(), options.window,
                               extended.counts.back());
        const RateSeries raw = growth_rate(extended);
        std::uint32_t window = options.window | 1u;
        if (const std::size_t len = raw.rates.size(); window > len)
            window = static_cast<std::uint32_t>(len % 2 ? len : len - 1);
        const RateSeries smoothed = smooth(raw, std::max(1u, window));
        ++report.burst_count_distribution[count_bursts(smoothed, options.prominence_fraction)];

        if (!r.reached_stop) ++report.non_terminated_runs;
        if (const auto sat = saturation_step(r.curve, stop_fraction)) {
            saturation.push_back(*sat);
            ++report.flattening_eligible_runs;
            if (detect_early_flattening(smoothed)) ++flattened;
        }
    }
    if (report.flattening_eligible_runs > 0)
        report.flattening_frequency =
            static_cast<double>(flattened) / static_cast<double>(report.flattening_eligible_runs);
    if (!saturation.empty()) {
        std::sort(saturation.begin(), saturation.end());
        auto rank = [&](double q) {
            const auto idx = static_cast<std::size_t>(std::ceil(q * saturation.size()));
            return saturation[idx == 0 ? 0 : idx - 1];
        };
        report.saturation_p25 = rank(0.25);
        report.saturation_p50 = rank(0.5);
        report.saturation_p75 = rank(0.75);
    }
    return report;
}

std::string FeatureReport::to_json(int indent) const {
    nlohmann::json bursts = nlohmann::json::object();
    for (const auto& [count, runs_with] : burst_count_distribution)
        bursts[std::to_string(count)] = runs_with;
    nlohmann::json quantiles;
    if (saturation_p50) {
        quantiles = {{"p25", *saturation_p25}, {"p50", *saturation_p50}, {"p75", *saturation_p75}};
    } else {
        quantiles = nullptr;
    }
    const nlohmann::json doc{{"preset", label},
                             {"runs", runs},
                             {"window", window},
                             {"prominence_fraction", prominence_fraction},
                             {"burst_count_distribution", bursts},
                             {"flattening_frequency", flattening_frequency},
                             {"flattening_eligible_runs", flattening_eligible_runs},
                             {"non_terminated_runs", non_terminated_runs},
                             {"saturation_step_quantiles", quantiles}};
    return doc.dump(indent);
}

} // namespace netdeploy
