#include "netdeploy/output.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace netdeploy {

const char* to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
        case OutputFormat::gnuplot: return "gnuplot";
    }
    return "?";
}

OutputFormat output_format_from(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "gnuplot") return OutputFormat::gnuplot;
    throw std::invalid_argument("unknown output format '" + name + "' (csv, json, gnuplot)");
}

namespace {

std::string format_fraction(std::uint32_t adopted, NodeId node_count) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g",
                  static_cast<double>(adopted) / static_cast<double>(node_count));
    return buffer;
}

} // namespace

void write_curve_csv(std::ostream& out, const GrowthCurve& curve) {
    out << "step,adopted,fraction\n";
    for (std::size_t t = 0; t < curve.counts.size(); ++t)
        out << t << "," << curve.counts[t] << ","
            << format_fraction(curve.counts[t], curve.node_count) << "\n";
}

void write_curve_gnuplot(std::ostream& out, const GrowthCurve& curve) {
    out << "# deployment growth curve\n";
    out << "# nodes " << curve.node_count << " config " << curve.config_digest << "\n";
    out << "# step adopted\n";
    for (std::size_t t = 0; t < curve.counts.size(); ++t)
        out << t << " " << curve.counts[t] << "\n";
}

void write_curve_json(std::ostream& out, const RunResult& result, std::uint64_t rng_seed) {
    const nlohmann::json doc{{"config_digest", result.curve.config_digest},
                             {"node_count", result.curve.node_count},
                             {"rng_seed", rng_seed},
                             {"seed_node", result.seed_node},
                             {"reached_stop", result.reached_stop},
                             {"counts", result.curve.counts}};
    out << doc.dump(2) << "\n";
}

void write_curve(std::ostream& out, OutputFormat format, const RunResult& result,
                 std::uint64_t rng_seed) {
    switch (format) {
        case OutputFormat::csv: write_curve_csv(out, result.curve); break;
        case OutputFormat::gnuplot: write_curve_gnuplot(out, result.curve); break;
        case OutputFormat::json: write_curve_json(out, result, rng_seed); break;
    }
}

void write_summary_csv(std::ostream& out, const EnsembleSummary& summary) {
    out << "step,mean,min,p25,median,p75,max\n";
    char mean_buffer[32];
    for (std::size_t t = 0; t < summary.mean.size(); ++t) {
        std::snprintf(mean_buffer, sizeof(mean_buffer), "%g", summary.mean[t]);
        out << t << "," << mean_buffer << "," << summary.min[t] << "," << summary.p25[t] << ","
            << summary.median[t] << "," << summary.p75[t] << "," << summary.max[t] << "\n";
    }
}

void write_summary_gnuplot(std::ostream& out, const EnsembleSummary& summary,
                           const FeatureReport& features) {
    out << "# ensemble of " << summary.num_runs << " runs, " << summary.non_terminated
        << " hit the step limit\n";
    out << "# step mean\n";
    char mean_buffer[32];
    for (std::size_t t = 0; t < summary.mean.size(); ++t) {
        std::snprintf(mean_buffer, sizeof(mean_buffer), "%g", summary.mean[t]);
        out << t << " " << mean_buffer << "\n";
    }
    out << "# features " << features.to_json() << "\n";
}

void write_summary_json(std::ostream& out, const EnsembleSummary& summary,
                        const FeatureReport& features) {
    nlohmann::json saturation = nlohmann::json::array();
    for (const auto& s : summary.saturation_steps) {
        if (s)
            saturation.push_back(*s);
        else
            saturation.push_back(nullptr);
    }
    const nlohmann::json doc{
        {"summary",
         {{"runs", summary.num_runs},
          {"node_count", summary.node_count},
          {"non_terminated", summary.non_terminated},
          {"mean", summary.mean},
          {"min", summary.min},
          {"p25", summary.p25},
          {"median", summary.median},
          {"p75", summary.p75},
          {"max", summary.max},
          {"saturation_steps", saturation}}},
        {"features", nlohmann::json::parse(features.to_json())}};
    out << doc.dump(2) << "\n";
}

} // namespace netdeploy
