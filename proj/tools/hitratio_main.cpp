// hitratio: evaluate top-k hashtag recommendations and run the reference
// content-based recommender end to end.
//
//   hitratio eval records.jsonl
//   hitratio sweep --mode fix_nr --fixed 3 --schedule 1,1,1,1,1 --schedule 1,2,3,3,3
//   hitratio recommend-eval corpus.jsonl --vectorizer mowe --embeddings vec.txt --k 5
//   hitratio stats corpus.jsonl
//   hitratio preprocess corpus.jsonl
//
// Exit status: 0 success, 1 unexpected failure, 2 parse error, 3 bad
// configuration, 4 empty result.

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hitratio/commands.hpp"
#include "hitratio/corpus_io.hpp"
#include "hitratio/error.hpp"
#include "hitratio/report.hpp"

namespace {

using namespace hitratio;

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kConfig = 3, kEmpty = 4 };

struct IngestFlags {
  std::string stopwords;
  std::size_t min_user_hashtags = 3;
  bool count_hashtags_as_words = false;
  std::optional<StopwordList> custom;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--stopwords", stopwords, "Stopword file, one word per line");
    cmd.add_option("--min-user-hashtags", min_user_hashtags,
                   "Keep users with at least this many distinct hashtags (0 disables)")
        ->capture_default_str();
    cmd.add_flag("--count-hashtags-as-words", count_hashtags_as_words,
                 "Count hashtag tokens towards the three-word minimum");
  }

  IngestOptions options() {
    IngestOptions o;
    if (!stopwords.empty()) {
      custom = StopwordList::load(stopwords);
      o.stopwords = &*custom;
    }
    o.min_user_hashtags = min_user_hashtags;
    o.eligibility.count_hashtags_as_words = count_hashtags_as_words;
    return o;
  }
};

std::vector<RawTweet> load_corpus(const std::string& path) {
  if (path == "-") return read_corpus(std::cin, "<stdin>");
  return read_corpus_file(path);
}

std::vector<std::size_t> parse_schedule(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError("sweep: bad schedule entry '" + item + "' in '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top-k hashtag recommendation evaluation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "Score recommendation records");
  std::string records_path;
  eval->add_option("records", records_path, "Record file (JSONL, '-' for stdin)")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Closed-form metric sweep over a match schedule");
  std::string sweep_mode;
  std::size_t sweep_fixed = 0;
  std::vector<std::string> schedules;
  sweep->add_option("--mode", sweep_mode, "fix_nr or fix_ng")
      ->required()
      ->check(CLI::IsMember({"fix_nr", "fix_ng"}));
  sweep->add_option("--fixed", sweep_fixed, "Value of the fixed count")->required();
  sweep->add_option("--schedule", schedules, "Comma-separated m values, repeatable")->required();

  // recommend-eval
  auto* rec = app.add_subcommand("recommend-eval", "Run the recommender and score it");
  std::string corpus_path;
  RecommendEvalOptions rec_opts;
  std::string vectorizer = "tfidf";
  std::string ranking = "relevance";
  std::string embeddings_path;
  std::string records_out;
  bool include_hashtags = false;
  bool timing = false;
  std::uint64_t seed = 0;
  IngestFlags rec_ingest;
  rec->add_option("corpus", corpus_path, "Corpus file (JSONL, '-' for stdin)")->required();
  rec->add_option("--k", rec_opts.config.k, "Recommendations per tweet")->capture_default_str();
  rec->add_option("--threshold", rec_opts.config.similarity_threshold,
                  "Minimum cosine similarity")
      ->capture_default_str();
  rec->add_option("--vectorizer", vectorizer)
      ->check(CLI::IsMember({"tfidf", "mowe"}))
      ->capture_default_str();
  rec->add_option("--ranking", ranking)
      ->check(CLI::IsMember({"popularity", "relevance"}))
      ->capture_default_str();
  rec->add_option("--split-fraction", rec_opts.split_fraction, "Most recent share used as test")
      ->capture_default_str();
  rec->add_option("--embeddings", embeddings_path, "Word vectors in text format");
  rec->add_option("--seed", seed, "Reserved; the pipeline is deterministic");
  rec->add_option("--records-out", records_out, "Also write scored pairs as a record file");
  rec->add_flag("--include-hashtags", include_hashtags, "Let hashtag tokens into tweet vectors");
  rec->add_flag("--timing", timing, "Add wall-clock duration to the report");
  rec_ingest.add_to(*rec);

  // stats / preprocess
  auto* stats = app.add_subcommand("stats", "Hashtag statistics of the filtered corpus");
  IngestFlags stats_ingest;
  stats->add_option("corpus", corpus_path, "Corpus file (JSONL, '-' for stdin)")->required();
  stats_ingest.add_to(*stats);

  auto* prep = app.add_subcommand("preprocess", "Emit normalized, filtered tweets as JSONL");
  IngestFlags prep_ingest;
  prep->add_option("corpus", corpus_path, "Corpus file (JSONL, '-' for stdin)")->required();
  prep_ingest.add_to(*prep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  const bool table = format == "table";

  try {
    if (*eval) {
      const auto records = records_path == "-" ? read_eval_records(std::cin, "<stdin>")
                                               : read_eval_records_file(records_path);
      const auto report = cmd_eval(records);
      table ? void(std::cout << render_table(report)) : emit(to_json(report));
    } else if (*sweep) {
      std::vector<std::vector<std::size_t>> parsed;
      for (const auto& s : schedules) parsed.push_back(parse_schedule(s));
      const auto result = cmd_sweep(parse_sweep_mode(sweep_mode), sweep_fixed, parsed);
      table ? void(std::cout << render_table(result)) : emit(to_json(result));
    } else if (*rec) {
      const auto started = std::chrono::steady_clock::now();
      rec_opts.config.vectorizer = parse_vectorizer_kind(vectorizer);
      rec_opts.config.ranking = parse_ranking(ranking);
      rec_opts.vectorize.include_hashtags = include_hashtags;
      rec_opts.ingest = rec_ingest.options();
      std::optional<EmbeddingTable> table_data;
      if (!embeddings_path.empty()) table_data = load_embeddings_file(embeddings_path);
      const auto corpus = load_corpus(corpus_path);
      auto result = cmd_recommend_eval(corpus, rec_opts, std::move(table_data));
      if (!records_out.empty()) {
        std::ofstream out(records_out);
        if (!out) throw ConfigError("cannot write " + records_out);
        write_eval_records(out, result.records);
      }
      if (timing) {
        result.report.duration_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      }
      table ? void(std::cout << render_table(result.report)) : emit(to_json(result.report));
    } else if (*stats) {
      const auto s = cmd_stats(load_corpus(corpus_path), stats_ingest.options());
      table ? void(std::cout << render_table(s)) : emit(to_json(s));
    } else if (*prep) {
      const auto result = ingest(load_corpus(corpus_path), prep_ingest.options());
      if (result.tweets.empty()) throw EmptyResultError("corpus is empty after filtering");
      write_clean_tweets(std::cout, result.tweets);
      std::cerr << "kept " << result.tweets.size() << " of " << result.input_count
                << " tweets (retweets " << result.retweets_dropped << ", user filter "
                << result.user_filter_dropped << ", ineligible " << result.ineligible_dropped
                << ")\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const EmptyResultError& e) {
    std::cerr << "empty result: " << e.what() << '\n';
    return kEmpty;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const DimensionMismatch& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
