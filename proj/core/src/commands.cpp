#include "hitratio/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hitratio/error.hpp"
#include "hitratio/labels.hpp"

namespace hitratio {

IngestResult ingest(std::span<const RawTweet> corpus, const IngestOptions& options) {
  if (options.stopwords == nullptr) throw ConfigError("ingest needs a stopword list");

  IngestResult result;
  result.input_count = corpus.size();

  std::vector<CleanTweet> normalized;
  normalized.reserve(corpus.size());
  for (const auto& raw : corpus) {
    if (is_retweet(raw)) {
      ++result.retweets_dropped;
      continue;
    }
    normalized.push_back(normalize(raw, *options.stopwords));
  }

  std::map<std::string, std::set<std::string>> user_tags;
  if (options.min_user_hashtags > 0) {
    for (const auto& t : normalized) user_tags[t.user].insert(t.hashtags.begin(), t.hashtags.end());
  }

  for (auto& t : normalized) {
    if (options.min_user_hashtags > 0 && user_tags[t.user].size() < options.min_user_hashtags) {
      ++result.user_filter_dropped;
      continue;
    }
    if (!is_eligible(t, options.eligibility)) {
      ++result.ineligible_dropped;
      continue;
    }
    result.tweets.push_back(std::move(t));
  }
  return result;
}

Split split_chronological(std::vector<CleanTweet> tweets, double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw ConfigError("split fraction must lie in [0, 1]");
  }
  std::sort(tweets.begin(), tweets.end(), [](const CleanTweet& a, const CleanTweet& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.id < b.id;
  });
  const auto n = tweets.size();
  // The epsilon keeps e.g. 0.1 * 30 = 3.0000000000000004 from rounding up to 4.
  auto test = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  test = std::min(test, n);

  Split s;
  const auto cut = tweets.begin() + static_cast<std::ptrdiff_t>(n - test);
  s.repository.assign(std::make_move_iterator(tweets.begin()), std::make_move_iterator(cut));
  s.test.assign(std::make_move_iterator(cut), std::make_move_iterator(tweets.end()));
  return s;
}

RunReport cmd_eval(std::span<const EvalPair> records) {
  if (records.empty()) throw EmptyResultError("no evaluation records");

  RunReport report;
  report.command = "eval";
  std::set<std::string> ids;
  std::vector<MetricScores> scores;
  scores.reserve(records.size());
  for (const auto& pair : records) {
    if (!ids.insert(pair.record_id).second) {
      throw ParseError("duplicate record_id '" + pair.record_id + "'");
    }
    try {
      validate(pair);
    } catch (const ConfigError& e) {
      throw ParseError(e.what());
    }
    scores.push_back(evaluate(pair));
    report.records.push_back({pair, scores.back()});
  }
  report.summary = summarize(scores);
  return report;
}

SweepTable cmd_sweep(SweepMode mode, std::size_t fixed_value,
                     std::span<const std::vector<std::size_t>> schedules) {
  if (fixed_value < 1) throw ConfigError("sweep: the fixed count must be at least 1");
  if (schedules.empty()) throw ConfigError("sweep: no match schedule given");

  SweepTable table{mode, fixed_value, {}};
  for (std::size_t b = 0; b < schedules.size(); ++b) {
    const auto& schedule = schedules[b];
    if (schedule.empty()) throw ConfigError("sweep: empty match schedule");
    SweepBlock block{schedule, {}};
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      const std::size_t varying = i + 1;
      MatchCounts c{schedule[i], mode == SweepMode::fix_nr ? fixed_value : varying,
                    mode == SweepMode::fix_nr ? varying : fixed_value};
      if (!c.feasible()) {
        throw ConfigError("sweep: schedule " + std::to_string(b + 1) + " row " +
                          std::to_string(varying) + ": m=" + std::to_string(c.matches) +
                          " exceeds min(n_R=" + std::to_string(c.recommended) +
                          ", n_G=" + std::to_string(c.ground_truth) + ")");
      }
      block.rows.push_back({varying, evaluate(c)});
    }
    table.blocks.push_back(std::move(block));
  }
  return table;
}

RecommendEvalResult cmd_recommend_eval(std::span<const RawTweet> corpus,
                                       const RecommendEvalOptions& options,
                                       std::optional<EmbeddingTable> embeddings) {
  options.config.validate();
  if (options.config.vectorizer == VectorizerKind::mowe && !embeddings) {
    throw ConfigError("the mowe vectorizer needs an embedding file");
  }

  auto ingested = ingest(corpus, options.ingest);
  if (ingested.tweets.empty()) throw EmptyResultError("corpus is empty after filtering");
  const auto stats = corpus_stats(ingested.tweets);

  auto split = split_chronological(std::move(ingested.tweets), options.split_fraction);
  if (split.test.empty()) throw EmptyResultError("test split is empty");
  if (split.repository.empty()) throw EmptyResultError("repository split is empty");

  std::shared_ptr<const Vectorizer> vectorizer;
  if (options.config.vectorizer == VectorizerKind::tfidf) {
    vectorizer = std::make_shared<Vectorizer>(TfIdfModel::fit(split.repository, options.vectorize));
  } else {
    vectorizer = std::make_shared<Vectorizer>(std::move(*embeddings), options.vectorize);
  }

  RecommendEvalResult out;
  auto& report = out.report;
  report.command = "recommend-eval";
  report.config = options.config;
  report.split_fraction = options.split_fraction;
  report.corpus = stats;
  report.split = SplitSizes{split.repository.size(), split.test.size()};

  const auto repo = Repository::build(std::move(split.repository), options.config, vectorizer,
                                      options.ingest.eligibility);

  std::vector<MetricScores> scores;
  scores.reserve(split.test.size());
  for (const auto& query : split.test) {
    EvalPair pair;
    pair.record_id = query.id;
    pair.recommended = recommend(repo, query, options.config);
    for (const auto& tag : query.hashtags) pair.ground_truth.push_back("#" + tag);
    scores.push_back(evaluate(pair));
    report.records.push_back({pair, scores.back()});
    out.records.push_back(std::move(pair));
  }
  report.summary = summarize(scores);
  return out;
}

CorpusStats cmd_stats(std::span<const RawTweet> corpus, const IngestOptions& options) {
  const auto ingested = ingest(corpus, options);
  return corpus_stats(ingested.tweets);
}

}  // namespace hitratio
