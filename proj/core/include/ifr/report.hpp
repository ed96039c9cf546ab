#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifr/aggregate.hpp"
#include "ifr/ingest.hpp"
#include "ifr/normalize.hpp"
#include "ifr/sensitivity.hpp"
#include "ifr/taxonomy.hpp"

namespace ifr {

enum class OutputFormat { Table, Csv, Json };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_output_format(std::string_view text);

std::string_view tool_version();

/// Provenance of one run. Input digests and the timestamp vary with things
/// that do not affect the numbers (row order, wall clock), so they are only
/// written by manifest_json(..., /*include_volatile=*/true), i.e. the sidecar
/// manifest file, never into numeric payloads.
struct RunManifest {
  std::string tool_version;
  std::string hierarchy_name;
  std::string hierarchy_version;
  std::string command;
  BoundsPolicy bounds;
  MissingDataPolicy missing;
  std::optional<SensitivityConfig> sensitivity;
  std::map<std::string, std::string> input_digests;  // path -> sha256 hex
  std::string timestamp;                             // ISO 8601 UTC
};

RunManifest make_manifest(std::string command, const HierarchySpec& spec,
                          const BoundsPolicy& bounds, const MissingDataPolicy& missing);

std::string manifest_json(const RunManifest& manifest, bool include_volatile);

/// One decimal, "NA" for missing. The only rounding in the pipeline.
std::string format_score(const MaybeScore& score);

std::string write_scorecards(std::span<const ScoreCard> cards, const HierarchySpec& spec,
                             OutputFormat format, const RunManifest& manifest);

std::string write_rank_table(const RankTable& table, OutputFormat format,
                             const RunManifest& manifest);

std::string write_robustness(const RobustnessReport& report, const SwitchMatrix* switch_matrix,
                             OutputFormat format, const RunManifest& manifest);

/// Tree breakdown NFRI -> sub-indexes -> elements -> sub-elements ->
/// indicators. Csv yields the same long-format series as write_plot_series.
std::string write_profile(const ScoreCard& card, const HierarchySpec& spec, OutputFormat format,
                          const RunManifest& manifest);

/// Long-format rows `country,year,level,node,parent,label,score,flags` for
/// external charting.
std::string write_plot_series(const ScoreCard& card, const HierarchySpec& spec);

struct ValidationSummary {
  std::vector<Diagnostic> errors;
  std::vector<std::string> warnings;
  std::optional<CoverageReport> coverage;
};

std::string write_validation(const ValidationSummary& summary, const HierarchySpec& spec,
                             OutputFormat format, const RunManifest& manifest);

}  // namespace ifr
