#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hitratio/preprocess.hpp"

namespace hitratio {

/// Dense tweet representation with its Euclidean norm cached.
class TweetVector {
 public:
  TweetVector() = default;
  explicit TweetVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t dimension() const { return values_.size(); }
  double norm() const { return norm_; }
  bool is_zero() const { return norm_ == 0.0; }

 private:
  std::vector<double> values_;
  double norm_ = 0.0;
};

/// dot(a, b) / (|a| |b|), clamped to [-1, 1]. 0 if either vector is zero.
/// Throws DimensionMismatch.
double cosine(const TweetVector& a, const TweetVector& b);

struct VectorizeOptions {
  /// Hashtags are the prediction target and stay out of tweet vectors
  /// unless this is set.
  bool include_hashtags = false;
};

/// Raw term frequency times smoothed idf, ln((1 + N) / (1 + df)) + 1.
class TfIdfModel {
 public:
  /// Throws EmptyResultError on an empty corpus.
  static TfIdfModel fit(std::span<const CleanTweet> corpus, VectorizeOptions options = {});

  TweetVector vectorize(const CleanTweet& tweet) const;

  std::size_t dimension() const { return idf_.size(); }
  std::size_t document_count() const { return document_count_; }
  const std::map<std::string, std::size_t, std::less<>>& vocabulary() const { return vocabulary_; }
  std::span<const double> idf() const { return idf_; }
  /// idf of `word`, or 0 when out of vocabulary.
  double idf(std::string_view word) const;
  const VectorizeOptions& options() const { return options_; }

 private:
  std::map<std::string, std::size_t, std::less<>> vocabulary_;  // word -> column
  std::vector<double> idf_;
  std::size_t document_count_ = 0;
  VectorizeOptions options_;
};

TfIdfModel fit_tfidf(std::span<const CleanTweet> corpus, VectorizeOptions options = {});
TweetVector tfidf_vector(const TfIdfModel& model, const CleanTweet& tweet);

/// Pretrained word vectors, loaded from the word2vec text format.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  /// Adds a word. Returns false (and keeps the existing vector) if the word
  /// is already present. Throws DimensionMismatch or ConfigError for
  /// non-finite components.
  bool add(std::string word, std::span<const float> vector);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }
  bool contains(std::string_view word) const { return find(word) != nullptr; }
  /// Pointer to `dimension()` floats, or nullptr when absent.
  const float* find(std::string_view word) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  std::size_t dimension_;
  std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
  std::vector<float> data_;
};

/// Reads "<vocab_size> <dimension>" then one "<word> <v1> ... <vd>" line per
/// word. Throws ParseError naming the offending line.
EmbeddingTable load_embeddings(std::istream& in, const std::string& source = "<embeddings>");
EmbeddingTable load_embeddings_file(const std::string& path);

/// Mean of the embeddings of the tweet's in-vocabulary words. Out-of-
/// vocabulary words are skipped; no known word gives the zero vector.
TweetVector mowe_vector(const EmbeddingTable& table, const CleanTweet& tweet,
                        VectorizeOptions options = {});

enum class VectorizerKind { tfidf, mowe };

std::string_view to_string(VectorizerKind kind);
/// Throws ConfigError for unknown names.
VectorizerKind parse_vectorizer_kind(std::string_view name);

/// Either backend behind one interface.
class Vectorizer {
 public:
  explicit Vectorizer(TfIdfModel model) : backend_(std::move(model)) {}
  Vectorizer(EmbeddingTable table, VectorizeOptions options)
      : backend_(std::move(table)), mowe_options_(options) {}

  VectorizerKind kind() const;
  std::size_t dimension() const;
  TweetVector vectorize(const CleanTweet& tweet) const;

  const TfIdfModel* tfidf() const { return std::get_if<TfIdfModel>(&backend_); }
  const EmbeddingTable* embeddings() const { return std::get_if<EmbeddingTable>(&backend_); }

 private:
  std::variant<TfIdfModel, EmbeddingTable> backend_;
  VectorizeOptions mowe_options_;
};

}  // namespace hitratio
