#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hitratio {

/// One evaluation case: an ordered top-k list and the author's hashtags.
/// Labels are compared in canonical form (see canonical_label).
struct EvalPair {
  std::string record_id;
  std::vector<std::string> recommended;
  std::vector<std::string> ground_truth;

  bool operator==(const EvalPair&) const = default;
};

/// Throws ConfigError if either list repeats a label after canonicalization.
void validate(const EvalPair& pair);

/// The three integers every metric is a function of.
struct MatchCounts {
  std::size_t matches = 0;             // |G ∩ R|
  std::size_t recommended = 0;         // n_R
  std::size_t ground_truth = 0;        // n_G

  /// matches <= min(recommended, ground_truth)
  bool feasible() const noexcept;
  bool operator==(const MatchCounts&) const = default;
};

MatchCounts count_matches(const EvalPair& pair);
std::size_t match_count(const EvalPair& pair);

// Degenerate denominators score 0. Precision divides by the number of
// recommendations actually emitted, not by the nominal k.
double precision(const MatchCounts& c) noexcept;
double recall(const MatchCounts& c) noexcept;
double hit_rate(const MatchCounts& c) noexcept;
double hit_ratio(const MatchCounts& c) noexcept;
/// 2m / (n_R + n_G), which is the harmonic mean of precision and recall
/// computed with a single rounding.
double f1(const MatchCounts& c) noexcept;

double precision(const EvalPair& pair);
double recall(const EvalPair& pair);
double hit_rate(const EvalPair& pair);
double hit_ratio(const EvalPair& pair);
double f1(const EvalPair& pair);

/// Harmonic mean of two ratios; 0 when both are 0.
double f1_score(double precision, double recall) noexcept;

struct MetricScores {
  double hit_rate = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double hit_ratio = 0.0;
  MatchCounts counts;

  bool operator==(const MetricScores&) const = default;
};

MetricScores evaluate(const MatchCounts& counts) noexcept;
MetricScores evaluate(const EvalPair& pair);

/// Arithmetic means over all records. Records without any recommendation
/// are averaged in as zeros and also counted separately.
struct MetricSummary {
  double hit_rate = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double hit_ratio = 0.0;
  std::size_t record_count = 0;
  std::size_t no_recommendation_count = 0;

  bool operator==(const MetricSummary&) const = default;
};

/// Throws EmptyResultError on an empty sequence.
MetricSummary summarize(std::span<const MetricScores> scores);

/// Half-up rounding to `decimals` places. Presentation only; computation
/// always carries full precision.
double round_half_up(double value, int decimals = 2);

}  // namespace hitratio
