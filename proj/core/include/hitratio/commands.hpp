#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hitratio/metrics.hpp"
#include "hitratio/preprocess.hpp"
#include "hitratio/recommender.hpp"
#include "hitratio/report.hpp"
#include "hitratio/vectorize.hpp"

namespace hitratio {

struct IngestOptions {
  const StopwordList* stopwords = &StopwordList::english();
  EligibilityOptions eligibility;
  /// Keep only users with at least this many distinct hashtags across their
  /// (non-retweet) tweets. 0 disables the filter.
  std::size_t min_user_hashtags = 3;
};

struct IngestResult {
  std::vector<CleanTweet> tweets;  // input order
  std::size_t input_count = 0;
  std::size_t retweets_dropped = 0;
  std::size_t user_filter_dropped = 0;
  std::size_t ineligible_dropped = 0;
};

/// Drop retweets, normalize, apply the user filter, then eligibility.
IngestResult ingest(std::span<const RawTweet> corpus, const IngestOptions& options = {});

struct Split {
  std::vector<CleanTweet> repository;
  std::vector<CleanTweet> test;
};

/// Orders by (timestamp, id); the last ceil(fraction * N) tweets form the
/// test set. Throws ConfigError unless 0 <= fraction <= 1.
Split split_chronological(std::vector<CleanTweet> tweets, double fraction);

/// Scores every record. Throws EmptyResultError on no records, ParseError
/// on duplicate ids or repeated labels.
RunReport cmd_eval(std::span<const EvalPair> records);

/// One block per schedule; row i has the varying count i + 1 and
/// schedule[i] matches. Throws ConfigError naming an infeasible row.
SweepTable cmd_sweep(SweepMode mode, std::size_t fixed_value,
                     std::span<const std::vector<std::size_t>> schedules);

struct RecommendEvalOptions {
  RecommenderConfig config;
  double split_fraction = 0.10;
  IngestOptions ingest;
  VectorizeOptions vectorize;
};

struct RecommendEvalResult {
  RunReport report;
  /// The (recommended, ground truth) pairs that were scored, in report order.
  std::vector<EvalPair> records;
};

/// ingest -> chronological split -> fit the vectorizer on the repository
/// -> recommend for each test tweet against its own hashtags. Throws
/// ConfigError if `embeddings` is missing for the mowe backend and
/// EmptyResultError if either side of the split is empty.
RecommendEvalResult cmd_recommend_eval(std::span<const RawTweet> corpus,
                                       const RecommendEvalOptions& options,
                                       std::optional<EmbeddingTable> embeddings = std::nullopt);

/// Hashtag statistics of the post-filter corpus.
CorpusStats cmd_stats(std::span<const RawTweet> corpus, const IngestOptions& options = {});

}  // namespace hitratio
