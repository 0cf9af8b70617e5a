#pragma once

#include <iosfwd>
#include <string>

#include "netdeploy/analysis.hpp"
#include "netdeploy/simulate.hpp"

namespace netdeploy {

enum class OutputFormat { csv, json, gnuplot };

const char* to_string(OutputFormat format);
OutputFormat output_format_from(const std::string& name);

/// Columns: step, adopted, fraction (fraction = adopted / node_count).
void write_curve_csv(std::ostream& out, const GrowthCurve& curve);
/// Two whitespace-separated columns (step, adopted) under a '#' header.
void write_curve_gnuplot(std::ostream& out, const GrowthCurve& curve);
void write_curve_json(std::ostream& out, const RunResult& result, std::uint64_t rng_seed);
void write_curve(std::ostream& out, OutputFormat format, const RunResult& result,
                 std::uint64_t rng_seed);

/// Columns: step, mean, min, p25, median, p75, max.
void write_summary_csv(std::ostream& out, const EnsembleSummary& summary);
/// Two columns (step, mean) under a '#' header; the feature report rides
/// along as a trailing '#' comment line.
void write_summary_gnuplot(std::ostream& out, const EnsembleSummary& summary,
                           const FeatureReport& features);
/// One document: {"summary": ..., "features": ...}.
void write_summary_json(std::ostream& out, const EnsembleSummary& summary,
                        const FeatureReport& features);

} // namespace netdeploy
