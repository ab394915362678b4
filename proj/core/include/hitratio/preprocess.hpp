#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hitratio {

struct RawTweet {
  std::string id;
  std::string user;
  std::int64_t timestamp = 0;  // epoch seconds
  std::string text;
};

struct CleanTweet {
  std::string id;
  std::string user;
  std::int64_t timestamp = 0;
  /// Lowercase tokens in text order. Hashtag tokens keep their '#'.
  std::vector<std::string> tokens;
  /// Canonical labels (no '#') of every hashtag token.
  std::set<std::string> hashtags;
  /// First spelling seen for each canonical label, e.g. "iphone" -> "#iPhone".
  std::map<std::string, std::string> hashtag_spelling;

  /// Number of tokens that are not hashtags.
  std::size_t word_count() const;
};

class StopwordList {
 public:
  /// The embedded English list (NLTK's, less "now": 178 words).
  static const StopwordList& english();

  /// One word per line; blank lines and lines starting with '#' are
  /// skipped. Entries are lowercased. Throws ParseError if nothing remains.
  static StopwordList parse(std::istream& in, const std::string& source = "<stopwords>");
  static StopwordList load(const std::string& path);

  explicit StopwordList(std::set<std::string, std::less<>> words);

  bool contains(std::string_view word) const { return words_.contains(word); }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

/// True iff the first token is "rt" (any case) and the second is a mention.
bool is_retweet(const RawTweet& raw);

/// Lowercases, drops URLs, mentions, a leading retweet marker, punctuation
/// other than a hashtag '#', and stopwords, then collapses consecutive
/// duplicate tokens. Punctuation inside a word splits it ("txt/call").
CleanTweet normalize(const RawTweet& raw, const StopwordList& stopwords);

struct EligibilityOptions {
  std::size_t min_words = 3;
  /// Count hashtag tokens towards min_words.
  bool count_hashtags_as_words = false;
};

/// At least one hashtag and at least min_words words.
bool is_eligible(const CleanTweet& tweet, const EligibilityOptions& options = {});

struct CorpusStats {
  std::size_t tweet_count = 0;
  std::size_t max_hashtags = 0;
  std::size_t min_hashtags = 0;
  double mean_hashtags = 0.0;

  bool operator==(const CorpusStats&) const = default;
};

/// Hashtags-per-tweet statistics. Throws EmptyResultError on an empty corpus.
CorpusStats corpus_stats(std::span<const CleanTweet> tweets);

}  // namespace hitratio
