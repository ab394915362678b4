#include "hitratio/report.hpp"

#include <fmt/format.h>

#include "hitratio/error.hpp"

namespace hitratio {
namespace {

using nlohmann::json;

std::string two(double v) { return fmt::format("{:.2f}", round_half_up(v, 2)); }

json scores_json(const MetricScores& s) {
  return {{"m", s.counts.matches},
          {"n_r", s.counts.recommended},
          {"n_g", s.counts.ground_truth},
          {"hit_rate", s.hit_rate},
          {"precision", s.precision},
          {"recall", s.recall},
          {"f1", s.f1},
          {"hit_ratio", s.hit_ratio}};
}

template <typename T>
T field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("report: missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("report: field '") + key + "' has the wrong type");
  }
}

MetricScores scores_from(const json& obj) {
  MetricScores s;
  s.counts = {field<std::size_t>(obj, "m"), field<std::size_t>(obj, "n_r"),
              field<std::size_t>(obj, "n_g")};
  s.hit_rate = field<double>(obj, "hit_rate");
  s.precision = field<double>(obj, "precision");
  s.recall = field<double>(obj, "recall");
  s.f1 = field<double>(obj, "f1");
  s.hit_ratio = field<double>(obj, "hit_ratio");
  return s;
}

json stats_json(const CorpusStats& s) {
  return {{"tweet_count", s.tweet_count},
          {"max_hashtags", s.max_hashtags},
          {"min_hashtags", s.min_hashtags},
          {"mean_hashtags", s.mean_hashtags}};
}

std::string join(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out + "]";
}

}  // namespace

bool RunReport::operator==(const RunReport& o) const {
  auto same_config = [](const std::optional<RecommenderConfig>& a,
                        const std::optional<RecommenderConfig>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->similarity_threshold == b->similarity_threshold && a->k == b->k &&
           a->ranking == b->ranking && a->vectorizer == b->vectorizer;
  };
  return command == o.command && same_config(config, o.config) &&
         split_fraction == o.split_fraction && corpus == o.corpus && split == o.split &&
         records == o.records && summary == o.summary && duration_seconds == o.duration_seconds;
}

json to_json(const RunReport& r) {
  json doc;
  doc["command"] = r.command;
  if (r.config) {
    doc["config"] = {{"k", r.config->k},
                     {"threshold", r.config->similarity_threshold},
                     {"vectorizer", to_string(r.config->vectorizer)},
                     {"ranking", to_string(r.config->ranking)}};
  }
  if (r.split_fraction) doc["split_fraction"] = *r.split_fraction;
  if (r.corpus) doc["corpus"] = stats_json(*r.corpus);
  if (r.split) doc["split"] = {{"repository", r.split->repository}, {"test", r.split->test}};

  json records = json::array();
  for (const auto& row : r.records) {
    json rec = scores_json(row.scores);
    rec["record_id"] = row.pair.record_id;
    rec["recommended"] = row.pair.recommended;
    rec["ground_truth"] = row.pair.ground_truth;
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  doc["summary"] = {{"hit_rate", r.summary.hit_rate},
                    {"precision", r.summary.precision},
                    {"recall", r.summary.recall},
                    {"f1", r.summary.f1},
                    {"hit_ratio", r.summary.hit_ratio},
                    {"record_count", r.summary.record_count},
                    {"no_recommendation_count", r.summary.no_recommendation_count}};
  if (r.duration_seconds) doc["duration_seconds"] = *r.duration_seconds;
  return doc;
}

RunReport run_report_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("report: expected a JSON object");
  RunReport r;
  r.command = field<std::string>(doc, "command");
  if (auto it = doc.find("config"); it != doc.end()) {
    RecommenderConfig c;
    c.k = field<std::size_t>(*it, "k");
    c.similarity_threshold = field<double>(*it, "threshold");
    c.vectorizer = parse_vectorizer_kind(field<std::string>(*it, "vectorizer"));
    c.ranking = parse_ranking(field<std::string>(*it, "ranking"));
    r.config = c;
  }
  if (doc.contains("split_fraction")) r.split_fraction = field<double>(doc, "split_fraction");
  if (auto it = doc.find("corpus"); it != doc.end()) {
    r.corpus = CorpusStats{field<std::size_t>(*it, "tweet_count"),
                           field<std::size_t>(*it, "max_hashtags"),
                           field<std::size_t>(*it, "min_hashtags"),
                           field<double>(*it, "mean_hashtags")};
  }
  if (auto it = doc.find("split"); it != doc.end()) {
    r.split = SplitSizes{field<std::size_t>(*it, "repository"), field<std::size_t>(*it, "test")};
  }
  for (const auto& rec : field<json>(doc, "records")) {
    RecordRow row;
    row.pair.record_id = field<std::string>(rec, "record_id");
    row.pair.recommended = field<std::vector<std::string>>(rec, "recommended");
    row.pair.ground_truth = field<std::vector<std::string>>(rec, "ground_truth");
    row.scores = scores_from(rec);
    r.records.push_back(std::move(row));
  }
  const auto s = field<json>(doc, "summary");
  r.summary.hit_rate = field<double>(s, "hit_rate");
  r.summary.precision = field<double>(s, "precision");
  r.summary.recall = field<double>(s, "recall");
  r.summary.f1 = field<double>(s, "f1");
  r.summary.hit_ratio = field<double>(s, "hit_ratio");
  r.summary.record_count = field<std::size_t>(s, "record_count");
  r.summary.no_recommendation_count = field<std::size_t>(s, "no_recommendation_count");
  if (doc.contains("duration_seconds")) {
    r.duration_seconds = field<double>(doc, "duration_seconds");
  }
  return r;
}

std::string render_table(const RunReport& r) {
  std::string out;
  if (r.config) {
    out += fmt::format("vectorizer={} ranking={} k={} threshold={}\n",
                       to_string(r.config->vectorizer), to_string(r.config->ranking), r.config->k,
                       r.config->similarity_threshold);
  }
  if (r.split) {
    out += fmt::format("repository={} test={}\n", r.split->repository, r.split->test);
  }
  out += fmt::format("{:<16} {:>3} {:>3} {:>3} {:>8} {:>5} {:>5} {:>5} {:>9}  {}\n", "record",
                     "n_R", "n_G", "m", "hit rate", "P", "R", "F1", "hit ratio",
                     "recommended | ground truth");
  for (const auto& row : r.records) {
    const auto& s = row.scores;
    out += fmt::format("{:<16} {:>3} {:>3} {:>3} {:>8} {:>5} {:>5} {:>5} {:>9}  {} | {}\n",
                       row.pair.record_id, s.counts.recommended, s.counts.ground_truth,
                       s.counts.matches, two(s.hit_rate), two(s.precision), two(s.recall),
                       two(s.f1), two(s.hit_ratio), join(row.pair.recommended),
                       join(row.pair.ground_truth));
  }
  const auto& m = r.summary;
  out += fmt::format("{:<16} {:>3} {:>3} {:>3} {:>8} {:>5} {:>5} {:>5} {:>9}\n", "mean", "", "",
                     "", two(m.hit_rate), two(m.precision), two(m.recall), two(m.f1),
                     two(m.hit_ratio));
  out += fmt::format("records={} without_recommendation={}\n", m.record_count,
                     m.no_recommendation_count);
  if (r.duration_seconds) out += fmt::format("duration={:.3f}s\n", *r.duration_seconds);
  return out;
}

std::string_view to_string(SweepMode mode) {
  return mode == SweepMode::fix_nr ? "fix_nr" : "fix_ng";
}

SweepMode parse_sweep_mode(std::string_view name) {
  if (name == "fix_nr") return SweepMode::fix_nr;
  if (name == "fix_ng") return SweepMode::fix_ng;
  throw ConfigError("unknown sweep mode '" + std::string(name) + "' (expected fix_nr or fix_ng)");
}

json to_json(const SweepTable& t) {
  json blocks = json::array();
  for (const auto& b : t.blocks) {
    json rows = json::array();
    for (const auto& row : b.rows) {
      json j = scores_json(row.scores);
      j["varying"] = row.varying;
      rows.push_back(std::move(j));
    }
    blocks.push_back({{"schedule", b.schedule}, {"rows", std::move(rows)}});
  }
  return {{"command", "sweep"},
          {"mode", to_string(t.mode)},
          {"fixed", t.fixed},
          {"blocks", std::move(blocks)}};
}

std::string render_table(const SweepTable& t) {
  const char* varying = t.mode == SweepMode::fix_nr ? "n_G" : "n_R";
  const char* fixed = t.mode == SweepMode::fix_nr ? "n_R" : "n_G";
  std::string out = fmt::format("{} fixed to {}\n", fixed, t.fixed);

  out += fmt::format("{:>4}", varying);
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    out += fmt::format(" | {:>2} {:>8} {:>5} {:>5} {:>5} {:>9}", "m", "hit rate", "P", "R", "F1",
                       "hit ratio");
  }
  out += '\n';
  std::size_t rows = 0;
  for (const auto& b : t.blocks) rows = std::max(rows, b.rows.size());
  for (std::size_t i = 0; i < rows; ++i) {
    out += fmt::format("{:>4}", i + 1);
    for (const auto& b : t.blocks) {
      if (i >= b.rows.size()) {
        out += fmt::format(" | {:>38}", "");
        continue;
      }
      const auto& s = b.rows[i].scores;
      out += fmt::format(" | {:>2} {:>8} {:>5} {:>5} {:>5} {:>9}", s.counts.matches,
                         two(s.hit_rate), two(s.precision), two(s.recall), two(s.f1),
                         two(s.hit_ratio));
    }
    out += '\n';
  }
  return out;
}

json to_json(const CorpusStats& stats) {
  json doc = stats_json(stats);
  doc["command"] = "stats";
  return doc;
}

std::string render_table(const CorpusStats& s) {
  return fmt::format(
      "No. of hashtagged tweets after pre-processing  {:>10}\n"
      "Max. number of hashtags per tweet              {:>10}\n"
      "Min. number of hashtags per tweet              {:>10}\n"
      "Avg. number of hashtags per tweet              {:>10}\n",
      s.tweet_count, s.max_hashtags, s.min_hashtags, round_half_up(s.mean_hashtags, 0));
}

}  // namespace hitratio
