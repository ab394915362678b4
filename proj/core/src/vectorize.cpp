#include "hitratio/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hitratio/error.hpp"

namespace hitratio {
namespace {

bool is_hashtag(const std::string& token) { return token.starts_with('#'); }

}  // namespace

TweetVector::TweetVector(std::vector<double> values) : values_(std::move(values)) {
  double sq = 0.0;
  for (double v : values_) sq += v * v;
  norm_ = std::sqrt(sq);
}

double cosine(const TweetVector& a, const TweetVector& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  if (a.is_zero() || b.is_zero()) return 0.0;
  double dot = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) dot += av[i] * bv[i];
  return std::clamp(dot / (a.norm() * b.norm()), -1.0, 1.0);
}

TfIdfModel TfIdfModel::fit(std::span<const CleanTweet> corpus, VectorizeOptions options) {
  if (corpus.empty()) throw EmptyResultError("cannot fit TF-IDF on an empty corpus");

  std::map<std::string, std::size_t, std::less<>> df;
  for (const auto& tweet : corpus) {
    std::set<std::string_view> seen;
    for (const auto& tok : tweet.tokens) {
      if (!options.include_hashtags && is_hashtag(tok)) continue;
      if (seen.insert(tok).second) ++df[tok];
    }
  }

  TfIdfModel model;
  model.options_ = options;
  model.document_count_ = corpus.size();
  model.idf_.reserve(df.size());
  const double n = static_cast<double>(corpus.size());
  for (const auto& [word, count] : df) {
    model.vocabulary_.emplace(word, model.idf_.size());
    model.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return model;
}

TweetVector TfIdfModel::vectorize(const CleanTweet& tweet) const {
  std::vector<double> tf(idf_.size(), 0.0);
  for (const auto& tok : tweet.tokens) {
    if (!options_.include_hashtags && is_hashtag(tok)) continue;
    if (auto it = vocabulary_.find(tok); it != vocabulary_.end()) tf[it->second] += 1.0;
  }
  for (std::size_t i = 0; i < tf.size(); ++i) tf[i] *= idf_[i];
  return TweetVector(std::move(tf));
}

double TfIdfModel::idf(std::string_view word) const {
  auto it = vocabulary_.find(word);
  return it == vocabulary_.end() ? 0.0 : idf_[it->second];
}

TfIdfModel fit_tfidf(std::span<const CleanTweet> corpus, VectorizeOptions options) {
  return TfIdfModel::fit(corpus, options);
}

TweetVector tfidf_vector(const TfIdfModel& model, const CleanTweet& tweet) {
  return model.vectorize(tweet);
}

TweetVector mowe_vector(const EmbeddingTable& table, const CleanTweet& tweet,
                        VectorizeOptions options) {
  std::vector<double> sum(table.dimension(), 0.0);
  std::size_t used = 0;
  for (const auto& tok : tweet.tokens) {
    if (!options.include_hashtags && is_hashtag(tok)) continue;
    const float* v = table.find(tok);
    if (v == nullptr) continue;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += static_cast<double>(v[i]);
    ++used;
  }
  if (used > 0) {
    const double n = static_cast<double>(used);
    for (double& x : sum) x /= n;
  }
  return TweetVector(std::move(sum));
}

std::string_view to_string(VectorizerKind kind) {
  return kind == VectorizerKind::tfidf ? "tfidf" : "mowe";
}

VectorizerKind parse_vectorizer_kind(std::string_view name) {
  if (name == "tfidf") return VectorizerKind::tfidf;
  if (name == "mowe") return VectorizerKind::mowe;
  throw ConfigError("unknown vectorizer '" + std::string(name) + "' (expected tfidf or mowe)");
}

VectorizerKind Vectorizer::kind() const {
  return std::holds_alternative<TfIdfModel>(backend_) ? VectorizerKind::tfidf
                                                      : VectorizerKind::mowe;
}

std::size_t Vectorizer::dimension() const {
  return std::visit([](const auto& b) { return b.dimension(); }, backend_);
}

TweetVector Vectorizer::vectorize(const CleanTweet& tweet) const {
  if (const auto* m = tfidf()) return m->vectorize(tweet);
  return mowe_vector(*embeddings(), tweet, mowe_options_);
}

}  // namespace hitratio
