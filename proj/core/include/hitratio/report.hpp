#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hitratio/metrics.hpp"
#include "hitratio/preprocess.hpp"
#include "hitratio/recommender.hpp"

namespace hitratio {

struct RecordRow {
  EvalPair pair;
  MetricScores scores;

  bool operator==(const RecordRow&) const = default;
};

struct SplitSizes {
  std::size_t repository = 0;
  std::size_t test = 0;

  bool operator==(const SplitSizes&) const = default;
};

/// Output of `eval` and `recommend-eval`. The summary always equals
/// summarize() over the record scores.
struct RunReport {
  std::string command;
  std::optional<RecommenderConfig> config;
  std::optional<double> split_fraction;
  std::optional<CorpusStats> corpus;
  std::optional<SplitSizes> split;
  std::vector<RecordRow> records;
  MetricSummary summary;
  /// Wall-clock seconds; only present when timing was requested, so that
  /// default output is reproducible byte for byte.
  std::optional<double> duration_seconds;

  bool operator==(const RunReport&) const;
};

nlohmann::json to_json(const RunReport& report);
/// Throws ParseError on missing or mistyped fields.
RunReport run_report_from_json(const nlohmann::json& doc);

/// Aligned plain-text rendering, two decimals half-up.
std::string render_table(const RunReport& report);

enum class SweepMode {
  fix_nr,  // n_R held fixed, n_G = 1, 2, ...
  fix_ng,  // n_G held fixed, n_R = 1, 2, ...
};

std::string_view to_string(SweepMode mode);
SweepMode parse_sweep_mode(std::string_view name);

struct SweepRow {
  std::size_t varying = 0;
  MetricScores scores;
};

struct SweepBlock {
  std::vector<std::size_t> schedule;
  std::vector<SweepRow> rows;
};

struct SweepTable {
  SweepMode mode = SweepMode::fix_nr;
  std::size_t fixed = 0;
  std::vector<SweepBlock> blocks;
};

nlohmann::json to_json(const SweepTable& table);
/// Blocks side by side, one row per varying value, as in a printed table.
std::string render_table(const SweepTable& table);

nlohmann::json to_json(const CorpusStats& stats);
std::string render_table(const CorpusStats& stats);

}  // namespace hitratio
