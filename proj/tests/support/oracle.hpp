#pragma once

// Straight-line reimplementation of vectorization, retrieval and ranking.
// Shares no code with the library beyond the CleanTweet data type; the
// arithmetic follows the same operation order so results agree bit for bit.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hitratio/preprocess.hpp"
#include "synthetic.hpp"

namespace hitratio::testing {

struct OracleConfig {
  bool use_embeddings = false;  // false: TF-IDF
  bool by_popularity = false;   // false: similarity-sum relevance
  double threshold = 0.5;
  std::size_t k = 10;
};

class BruteForceRecommender {
 public:
  /// `vectors` is only consulted when config.use_embeddings is set.
  BruteForceRecommender(const std::vector<CleanTweet>& repository, const WordVectors& vectors,
                        OracleConfig config);

  /// (tweet id, similarity) for every repository tweet at or above the
  /// threshold, best first.
  std::vector<std::pair<std::string, double>> similar(const CleanTweet& query) const;
  std::vector<std::string> recommend(const CleanTweet& query) const;

 private:
  using Sparse = std::vector<std::pair<std::string, double>>;  // sorted by word
  Sparse vectorize(const CleanTweet& tweet) const;
  static double cos(const Sparse& a, const Sparse& b);

  const std::vector<CleanTweet>& repository_;
  const WordVectors& vectors_;
  OracleConfig config_;
  std::vector<std::pair<std::string, double>> idf_;  // sorted by word
  std::vector<Sparse> repo_vectors_;
};

}  // namespace hitratio::testing
