#include <fstream>

#include "hitratio/error.hpp"
#include "hitratio/labels.hpp"
#include "hitratio/preprocess.hpp"

namespace hitratio {
namespace {

// NLTK English stopword list without "now". Contracted forms are kept for
// completeness even though the tokenizer splits on apostrophes.
constexpr const char* kEnglish[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're", "you've",
    "you'll", "you'd", "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself",
    "she", "she's", "her", "hers", "herself", "it", "it's", "its", "itself", "they", "them",
    "their", "theirs", "themselves", "what", "which", "who", "whom", "this", "that", "that'll",
    "these", "those", "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
    "because", "as", "until", "while", "of", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above", "below", "to", "from",
    "up", "down", "in", "out", "on", "off", "over", "under", "again", "further", "then", "once",
    "here", "there", "when", "where", "why", "how", "all", "any", "both", "each", "few", "more",
    "most", "other", "some", "such", "no", "nor", "not", "only", "own", "same", "so", "than",
    "too", "very", "s", "t", "can", "will", "just", "don", "don't", "should", "should've",
    "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't",
    "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven",
    "haven't", "isn", "isn't", "ma", "mightn", "mightn't", "mustn", "mustn't", "needn",
    "needn't", "shan", "shan't", "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't",
    "won", "won't", "wouldn", "wouldn't",
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

StopwordList::StopwordList(std::set<std::string, std::less<>> words) : words_(std::move(words)) {
  if (words_.empty()) throw ConfigError("stopword list must not be empty");
}

const StopwordList& StopwordList::english() {
  static const StopwordList list{std::set<std::string, std::less<>>(std::begin(kEnglish),
                                                                   std::end(kEnglish))};
  return list;
}

StopwordList StopwordList::parse(std::istream& in, const std::string& source) {
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(ascii_lower(word));
  }
  if (words.empty()) throw ParseError(source + ": no stopwords found");
  return StopwordList(std::move(words));
}

StopwordList StopwordList::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open stopword file");
  return parse(in, path);
}

}  // namespace hitratio
