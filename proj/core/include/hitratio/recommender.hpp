#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hitratio/preprocess.hpp"
#include "hitratio/vectorize.hpp"

namespace hitratio {

enum class Ranking {
  popularity,  // number of similar tweets carrying the hashtag
  relevance,   // sum of the similarities of those tweets
};

std::string_view to_string(Ranking ranking);
/// Throws ConfigError for unknown names.
Ranking parse_ranking(std::string_view name);

struct RecommenderConfig {
  double similarity_threshold = 0.5;
  std::size_t k = 10;
  Ranking ranking = Ranking::relevance;
  VectorizerKind vectorizer = VectorizerKind::tfidf;

  /// Throws ConfigError unless 0 <= threshold <= 1 and k >= 1.
  void validate() const;
};

struct RepositoryEntry {
  CleanTweet tweet;
  TweetVector vector;
};

/// Searchable, immutable set of vectorized tweets. Safe to query from any
/// number of threads.
class Repository {
 public:
  /// Vectorizes every tweet in input order. Throws EmptyResultError on an
  /// empty corpus, ConfigError if a tweet is ineligible or the vectorizer
  /// does not match config.vectorizer.
  static Repository build(std::vector<CleanTweet> corpus, const RecommenderConfig& config,
                          std::shared_ptr<const Vectorizer> vectorizer,
                          const EligibilityOptions& eligibility = {});

  std::span<const RepositoryEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  VectorizerKind backend() const { return vectorizer_->kind(); }
  const Vectorizer& vectorizer() const { return *vectorizer_; }
  std::size_t dimension() const { return vectorizer_->dimension(); }

 private:
  Repository(std::vector<RepositoryEntry> entries, std::shared_ptr<const Vectorizer> v)
      : entries_(std::move(entries)), vectorizer_(std::move(v)) {}

  std::vector<RepositoryEntry> entries_;
  std::shared_ptr<const Vectorizer> vectorizer_;
};

struct SimilarTweet {
  const RepositoryEntry* entry;
  double similarity;
};

/// Exact full scan: every entry with cosine >= threshold, by similarity
/// descending then tweet id ascending. Throws DimensionMismatch.
std::vector<SimilarTweet> retrieve_similar(const Repository& repo, const TweetVector& query,
                                           double threshold);

struct Candidate {
  std::string hashtag;  // canonical, no '#'
  double score = 0.0;
  std::size_t supporting_count = 0;

  bool operator==(const Candidate&) const = default;
};

// Both rankings order by score descending, then label ascending.
std::vector<Candidate> rank_popularity(std::span<const SimilarTweet> similar);
std::vector<Candidate> rank_relevance(std::span<const SimilarTweet> similar);
std::vector<Candidate> rank(std::span<const SimilarTweet> similar, Ranking ranking);

/// Up to config.k distinct '#'-prefixed canonical labels for `query`.
/// Fewer (possibly none) when too few similar tweets pass the threshold.
/// The query's own hashtags never enter its vector.
std::vector<std::string> recommend(const Repository& repo, const CleanTweet& query,
                                   const RecommenderConfig& config);

}  // namespace hitratio
