#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hitratio/metrics.hpp"
#include "hitratio/preprocess.hpp"

namespace hitratio {

// Line-delimited JSON. Blank lines are skipped; every error is a
// ParseError carrying the 1-based line number.

/// {"id", "user", "timestamp", "text"} per line. `id` and `user` may be
/// strings or integers. Duplicate ids are rejected.
std::vector<RawTweet> read_corpus(std::istream& in, const std::string& source = "<corpus>");
std::vector<RawTweet> read_corpus_file(const std::string& path);

/// {"record_id", "recommended": [...], "ground_truth": [...]} per line.
/// Rejects duplicate record ids and labels repeated within a list.
std::vector<EvalPair> read_eval_records(std::istream& in, const std::string& source = "<records>");
std::vector<EvalPair> read_eval_records_file(const std::string& path);

void write_eval_records(std::ostream& out, std::span<const EvalPair> records);

/// {"id", "user", "timestamp", "tokens", "hashtags"} per line.
void write_clean_tweets(std::ostream& out, std::span<const CleanTweet> tweets);

}  // namespace hitratio
