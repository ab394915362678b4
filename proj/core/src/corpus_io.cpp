#include "hitratio/corpus_io.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "hitratio/error.hpp"
#include "hitratio/labels.hpp"

namespace hitratio {
namespace {

using nlohmann::json;

std::string identifier(const json& obj, const char* key, const std::string& source,
                       std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(source, line, std::string("missing field '") + key + "'");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return it->dump();
  throw ParseError(source, line, std::string("field '") + key + "' must be a string or integer");
}

std::vector<std::string> label_list(const json& obj, const char* key, const std::string& source,
                                    std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    throw ParseError(source, line, std::string("field '") + key + "' must be an array");
  }
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : *it) {
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
      throw ParseError(source, line, std::string("'") + key + "' entries must be non-empty strings");
    }
    auto label = v.get<std::string>();
    if (!seen.insert(canonical_label(label)).second) {
      throw ParseError(source, line, "duplicate label '" + label + "' in '" + key + "'");
    }
    out.push_back(std::move(label));
  }
  return out;
}

template <typename F>
void for_each_json_line(std::istream& in, const std::string& source, F&& f) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(source, lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(source, lineno, "expected a JSON object");
    f(obj, lineno);
  }
}

}  // namespace

std::vector<RawTweet> read_corpus(std::istream& in, const std::string& source) {
  std::vector<RawTweet> out;
  std::set<std::string> ids;
  for_each_json_line(in, source, [&](const json& obj, std::size_t line) {
    RawTweet t;
    t.id = identifier(obj, "id", source, line);
    t.user = identifier(obj, "user", source, line);
    auto ts = obj.find("timestamp");
    if (ts == obj.end() || !ts->is_number_integer() || ts->get<std::int64_t>() < 0) {
      throw ParseError(source, line, "'timestamp' must be a non-negative integer");
    }
    t.timestamp = ts->get<std::int64_t>();
    auto text = obj.find("text");
    if (text == obj.end() || !text->is_string()) {
      throw ParseError(source, line, "'text' must be a string");
    }
    t.text = text->get<std::string>();
    if (!ids.insert(t.id).second) throw ParseError(source, line, "duplicate id '" + t.id + "'");
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<RawTweet> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open corpus file");
  return read_corpus(in, path);
}

std::vector<EvalPair> read_eval_records(std::istream& in, const std::string& source) {
  std::vector<EvalPair> out;
  std::set<std::string> ids;
  for_each_json_line(in, source, [&](const json& obj, std::size_t line) {
    EvalPair p;
    p.record_id = identifier(obj, "record_id", source, line);
    p.recommended = label_list(obj, "recommended", source, line);
    p.ground_truth = label_list(obj, "ground_truth", source, line);
    if (!ids.insert(p.record_id).second) {
      throw ParseError(source, line, "duplicate record_id '" + p.record_id + "'");
    }
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<EvalPair> read_eval_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open record file");
  return read_eval_records(in, path);
}

void write_eval_records(std::ostream& out, std::span<const EvalPair> records) {
  for (const auto& r : records) {
    json obj = {{"record_id", r.record_id},
                {"recommended", r.recommended},
                {"ground_truth", r.ground_truth}};
    out << obj.dump() << '\n';
  }
}

void write_clean_tweets(std::ostream& out, std::span<const CleanTweet> tweets) {
  for (const auto& t : tweets) {
    json tags = json::array();
    for (const auto& h : t.hashtags) tags.push_back("#" + h);
    json obj = {{"id", t.id},
                {"user", t.user},
                {"timestamp", t.timestamp},
                {"tokens", t.tokens},
                {"hashtags", tags}};
    out << obj.dump() << '\n';
  }
}

}  // namespace hitratio
