#include "hitratio/preprocess.hpp"

#include <algorithm>

#include "hitratio/error.hpp"
#include "hitratio/labels.hpp"

namespace hitratio {
namespace {

struct CodePoint {
  char32_t value;
  std::size_t length;  // bytes consumed
};

CodePoint decode_utf8(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  auto cont = [&](std::size_t i) -> int {
    if (pos + i >= s.size()) return -1;
    const auto b = static_cast<unsigned char>(s[pos + i]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) return {b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    if (int c1 = cont(1); c1 >= 0) return {static_cast<char32_t>(((b0 & 0x1F) << 6) | c1), 2};
  } else if ((b0 & 0xF0) == 0xE0) {
    int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) {
      return {static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2), 3};
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
      return {static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3), 4};
    }
  }
  return {0xFFFD, 1};
}

bool is_space(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000;
}

// Letters, digits, '_' and any code point outside the punctuation/symbol
// blocks below.
bool is_word_char(char32_t c) {
  if (c < 0x80) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           c == '_';
  }
  if (c == 0xFFFD) return false;
  if (c >= 0xA1 && c <= 0xBF) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;  // punctuation, symbols, arrows, dingbats
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE00 && c <= 0xFE0F) return false;  // variation selectors
  if (c >= 0xFE30 && c <= 0xFE4F) return false;
  if ((c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20) ||
      (c >= 0xFF3B && c <= 0xFF40) || (c >= 0xFF5B && c <= 0xFF65)) {
    return false;
  }
  if (c >= 0x1F000 && c <= 0x1FAFF) return false;  // emoji
  return true;
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = std::string_view::npos;
  for (std::size_t i = 0; i < text.size();) {
    const auto cp = decode_utf8(text, i);
    if (is_space(cp.value)) {
      if (start != std::string_view::npos) out.push_back(text.substr(start, i - start));
      start = std::string_view::npos;
    } else if (start == std::string_view::npos) {
      start = i;
    }
    i += cp.length;
  }
  if (start != std::string_view::npos) out.push_back(text.substr(start));
  return out;
}

bool is_url(std::string_view token) {
  const auto lower = ascii_lower(token);
  std::string_view v = lower;
  // Skip leading punctuation such as "(" or "<" before the scheme.
  while (!v.empty()) {
    const auto cp = decode_utf8(v, 0);
    if (is_word_char(cp.value)) break;
    v.remove_prefix(cp.length);
  }
  return v.starts_with("http://") || v.starts_with("https://") || v.starts_with("www.");
}

bool is_mention_token(std::string_view token) { return token.size() > 1 && token[0] == '@'; }

struct Piece {
  enum class Kind { word, hashtag } kind;
  std::string text;  // original case, without '#'
};

// Splits one whitespace token on punctuation. '#' or '@' directly followed
// by word characters opens a hashtag or mention; mentions are discarded.
std::vector<Piece> split_pieces(std::string_view token) {
  enum class State { none, word, hash, mention };
  std::vector<Piece> out;
  State state = State::none;
  std::string body;

  auto flush = [&] {
    if (!body.empty()) {
      if (state == State::word) out.push_back({Piece::Kind::word, body});
      if (state == State::hash) out.push_back({Piece::Kind::hashtag, body});
    }
    body.clear();
    state = State::none;
  };

  for (std::size_t i = 0; i < token.size();) {
    const auto cp = decode_utf8(token, i);
    if (is_word_char(cp.value)) {
      if (state == State::none) state = State::word;
      body.append(token.substr(i, cp.length));
    } else if (cp.value == '#') {
      flush();
      state = State::hash;
    } else if (cp.value == '@') {
      flush();
      state = State::mention;
    } else {
      flush();
    }
    i += cp.length;
  }
  flush();
  return out;
}

}  // namespace

std::size_t CleanTweet::word_count() const {
  return static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(), [](const std::string& t) { return !t.starts_with('#'); }));
}

bool is_retweet(const RawTweet& raw) {
  const auto tokens = split_whitespace(raw.text);
  return tokens.size() >= 2 && ascii_lower(tokens[0]) == "rt" && is_mention_token(tokens[1]);
}

CleanTweet normalize(const RawTweet& raw, const StopwordList& stopwords) {
  CleanTweet out{raw.id, raw.user, raw.timestamp, {}, {}, {}};

  auto tokens = split_whitespace(raw.text);
  std::size_t first = is_retweet(raw) ? 1 : 0;

  for (std::size_t i = first; i < tokens.size(); ++i) {
    if (is_url(tokens[i])) continue;
    for (auto& piece : split_pieces(tokens[i])) {
      auto lower = ascii_lower(piece.text);
      if (piece.kind == Piece::Kind::hashtag) {
        out.hashtag_spelling.try_emplace(lower, "#" + piece.text);
        out.hashtags.insert(lower);
        lower.insert(lower.begin(), '#');
      } else if (stopwords.contains(lower)) {
        continue;
      }
      if (!out.tokens.empty() && out.tokens.back() == lower) continue;
      out.tokens.push_back(std::move(lower));
    }
  }
  return out;
}

bool is_eligible(const CleanTweet& tweet, const EligibilityOptions& options) {
  if (tweet.hashtags.empty()) return false;
  const auto words = options.count_hashtags_as_words ? tweet.tokens.size() : tweet.word_count();
  return words >= options.min_words;
}

CorpusStats corpus_stats(std::span<const CleanTweet> tweets) {
  if (tweets.empty()) throw EmptyResultError("corpus is empty after filtering");

  CorpusStats s;
  s.tweet_count = tweets.size();
  s.min_hashtags = tweets.front().hashtags.size();
  std::size_t total = 0;
  for (const auto& t : tweets) {
    const auto n = t.hashtags.size();
    s.max_hashtags = std::max(s.max_hashtags, n);
    s.min_hashtags = std::min(s.min_hashtags, n);
    total += n;
  }
  s.mean_hashtags = static_cast<double>(total) / static_cast<double>(tweets.size());
  return s;
}

}  // namespace hitratio
