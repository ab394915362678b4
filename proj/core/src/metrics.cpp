#include "hitratio/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "hitratio/error.hpp"
#include "hitratio/labels.hpp"

namespace hitratio {
namespace {

double ratio(std::size_t num, std::size_t den) noexcept {
  if (den == 0) return 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

void check_unique(const std::vector<std::string>& labels, const EvalPair& pair,
                  const char* which) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(canonical_label(l)).second) {
      throw ConfigError("record '" + pair.record_id + "': duplicate label '" + l + "' in " +
                        which);
    }
  }
}

}  // namespace

void validate(const EvalPair& pair) {
  check_unique(pair.recommended, pair, "recommended");
  check_unique(pair.ground_truth, pair, "ground_truth");
}

bool MatchCounts::feasible() const noexcept {
  return matches <= std::min(recommended, ground_truth);
}

MatchCounts count_matches(const EvalPair& pair) {
  std::unordered_set<std::string> truth;
  truth.reserve(pair.ground_truth.size());
  for (const auto& g : pair.ground_truth) truth.insert(canonical_label(g));

  std::unordered_set<std::string> counted;
  std::size_t m = 0;
  for (const auto& r : pair.recommended) {
    auto label = canonical_label(r);
    if (truth.contains(label) && counted.insert(label).second) ++m;
  }
  return {m, pair.recommended.size(), pair.ground_truth.size()};
}

std::size_t match_count(const EvalPair& pair) { return count_matches(pair).matches; }

double precision(const MatchCounts& c) noexcept { return ratio(c.matches, c.recommended); }

double recall(const MatchCounts& c) noexcept { return ratio(c.matches, c.ground_truth); }

double hit_rate(const MatchCounts& c) noexcept { return c.matches >= 1 ? 1.0 : 0.0; }

double hit_ratio(const MatchCounts& c) noexcept {
  return ratio(c.matches, std::min(c.recommended, c.ground_truth));
}

double f1(const MatchCounts& c) noexcept {
  if (c.matches == 0) return 0.0;
  return ratio(2 * c.matches, c.recommended + c.ground_truth);
}

double precision(const EvalPair& pair) { return precision(count_matches(pair)); }
double recall(const EvalPair& pair) { return recall(count_matches(pair)); }
double hit_rate(const EvalPair& pair) { return hit_rate(count_matches(pair)); }
double hit_ratio(const EvalPair& pair) { return hit_ratio(count_matches(pair)); }
double f1(const EvalPair& pair) { return f1(count_matches(pair)); }

double f1_score(double p, double r) noexcept {
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

MetricScores evaluate(const MatchCounts& counts) noexcept {
  return {hit_rate(counts), precision(counts), recall(counts), f1(counts), hit_ratio(counts),
          counts};
}

MetricScores evaluate(const EvalPair& pair) { return evaluate(count_matches(pair)); }

MetricSummary summarize(std::span<const MetricScores> scores) {
  if (scores.empty()) throw EmptyResultError("cannot summarize an empty set of records");

  MetricSummary s;
  for (const auto& x : scores) {
    s.hit_rate += x.hit_rate;
    s.precision += x.precision;
    s.recall += x.recall;
    s.f1 += x.f1;
    s.hit_ratio += x.hit_ratio;
    if (x.counts.recommended == 0) ++s.no_recommendation_count;
  }
  s.record_count = scores.size();
  const auto n = static_cast<double>(scores.size());
  s.hit_rate /= n;
  s.precision /= n;
  s.recall /= n;
  s.f1 /= n;
  s.hit_ratio /= n;
  return s;
}

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // The nudge keeps values like 0.125 (exact in binary) rounding up and
  // absorbs products such as 0.665 * 100 = 66.49999...
  return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

}  // namespace hitratio
