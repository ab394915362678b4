#include "hitratio/recommender.hpp"

#include <algorithm>
#include <map>

#include "hitratio/error.hpp"

namespace hitratio {
namespace {

void sort_candidates(std::vector<Candidate>& c) {
  std::sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.hashtag < b.hashtag;
  });
}

template <typename Weight>
std::vector<Candidate> accumulate(std::span<const SimilarTweet> similar, Weight weight) {
  std::map<std::string, Candidate> by_label;
  for (const auto& s : similar) {
    for (const auto& tag : s.entry->tweet.hashtags) {
      auto& c = by_label[tag];
      c.hashtag = tag;
      c.score += weight(s);
      ++c.supporting_count;
    }
  }
  std::vector<Candidate> out;
  out.reserve(by_label.size());
  for (auto& [_, c] : by_label) out.push_back(std::move(c));
  sort_candidates(out);
  return out;
}

}  // namespace

std::string_view to_string(Ranking ranking) {
  return ranking == Ranking::popularity ? "popularity" : "relevance";
}

Ranking parse_ranking(std::string_view name) {
  if (name == "popularity") return Ranking::popularity;
  if (name == "relevance") return Ranking::relevance;
  throw ConfigError("unknown ranking '" + std::string(name) +
                    "' (expected popularity or relevance)");
}

void RecommenderConfig::validate() const {
  if (!(similarity_threshold >= 0.0 && similarity_threshold <= 1.0)) {
    throw ConfigError("similarity threshold must lie in [0, 1]");
  }
  if (k < 1) throw ConfigError("k must be at least 1");
}

Repository Repository::build(std::vector<CleanTweet> corpus, const RecommenderConfig& config,
                             std::shared_ptr<const Vectorizer> vectorizer,
                             const EligibilityOptions& eligibility) {
  config.validate();
  if (!vectorizer) throw ConfigError("repository needs a vectorizer");
  if (vectorizer->kind() != config.vectorizer) {
    throw ConfigError("vectorizer backend '" + std::string(to_string(vectorizer->kind())) +
                      "' does not match configured '" +
                      std::string(to_string(config.vectorizer)) + "'");
  }
  if (corpus.empty()) throw EmptyResultError("repository corpus is empty");

  std::vector<RepositoryEntry> entries;
  entries.reserve(corpus.size());
  for (auto& tweet : corpus) {
    if (!is_eligible(tweet, eligibility)) {
      throw ConfigError("tweet '" + tweet.id + "' is not eligible for the repository");
    }
    auto vec = vectorizer->vectorize(tweet);
    entries.push_back({std::move(tweet), std::move(vec)});
  }
  return Repository(std::move(entries), std::move(vectorizer));
}

std::vector<SimilarTweet> retrieve_similar(const Repository& repo, const TweetVector& query,
                                           double threshold) {
  if (query.dimension() != repo.dimension()) {
    throw DimensionMismatch(repo.dimension(), query.dimension());
  }
  std::vector<SimilarTweet> out;
  for (const auto& e : repo.entries()) {
    const double sim = cosine(query, e.vector);
    if (sim >= threshold) out.push_back({&e, sim});
  }
  std::sort(out.begin(), out.end(), [](const SimilarTweet& a, const SimilarTweet& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.entry->tweet.id < b.entry->tweet.id;
  });
  return out;
}

std::vector<Candidate> rank_popularity(std::span<const SimilarTweet> similar) {
  return accumulate(similar, [](const SimilarTweet&) { return 1.0; });
}

std::vector<Candidate> rank_relevance(std::span<const SimilarTweet> similar) {
  return accumulate(similar, [](const SimilarTweet& s) { return s.similarity; });
}

std::vector<Candidate> rank(std::span<const SimilarTweet> similar, Ranking ranking) {
  return ranking == Ranking::popularity ? rank_popularity(similar) : rank_relevance(similar);
}

std::vector<std::string> recommend(const Repository& repo, const CleanTweet& query,
                                   const RecommenderConfig& config) {
  config.validate();
  if (repo.backend() != config.vectorizer) {
    throw ConfigError("query configured for '" + std::string(to_string(config.vectorizer)) +
                      "' but repository uses '" + std::string(to_string(repo.backend())) + "'");
  }
  const auto similar =
      retrieve_similar(repo, repo.vectorizer().vectorize(query), config.similarity_threshold);
  const auto ranked = rank(similar, config.ranking);

  std::vector<std::string> out;
  const auto n = std::min(config.k, ranked.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("#" + ranked[i].hashtag);
  return out;
}

}  // namespace hitratio
