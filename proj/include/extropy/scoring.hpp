#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "extropy/probability_vector.hpp"

namespace extropy::scoring {

enum class Rule { kLog, kTotalLog, kQuadratic };

/// Parses "log", "totallog" or "quadratic"; throws std::invalid_argument
/// for anything else.
Rule parse_rule(const std::string& name);
std::string rule_name(Rule rule);

/// The three rules in their fixed output order.
const std::vector<Rule>& all_rules();

/// One observed forecasting occasion: a pmf over n outcomes and the index
/// of the outcome that occurred.
struct ForecastRecord {
  std::string id;
  ProbabilityVector forecast;
  std::size_t outcome;  // < forecast.size()
};

/// log p_o. -inf when the occurring outcome had zero mass; rewards only the
/// mass placed on what happened (local rule).
double log_score(const ProbabilityVector& forecast, std::size_t outcome);

/// log p_o + sum over i != o of log(1 - p_i). -inf when p_o = 0 or some
/// non-occurring mass is 1; also rewards low mass on what did not happen.
double total_log_score(const ProbabilityVector& forecast, std::size_t outcome);

/// 2 p_o - sum p_i^2, bounded in [-1, 1].
double quadratic_score(const ProbabilityVector& forecast, std::size_t outcome);

/// Dispatch on the rule. Outcome must index into the forecast.
double score(Rule rule, const ProbabilityVector& forecast, std::size_t outcome);

/// Expectation of the total log score when the outcome is drawn from the
/// forecast itself, by exhaustive summation (zero-mass outcomes contribute
/// zero). Equals -(entropy + extropy).
double expected_total_log(const ProbabilityVector& forecast);

struct ScoreEntry {
  std::string id;
  Rule rule;
  double value;  // -inf allowed
  bool finite;
};

struct RuleTotal {
  Rule rule;
  double value;  // -inf when any contributing score was -inf
  bool finite;
};

/// Per-record scores in input order (rules in the requested order within
/// each record) plus one running total per rule.
struct ScoreReport {
  std::vector<ScoreEntry> per_record;
  std::vector<RuleTotal> totals;
  std::size_t record_count = 0;
};

/// Scores every record under every requested rule. Records may differ in
/// dimension; each is scored independently. Requires at least one record
/// and at least one rule; infinite scores are flagged, never fatal.
ScoreReport score_sequence(const std::vector<ForecastRecord>& records,
                           const std::vector<Rule>& rules);

/// Expected scores of candidate forecasts under outcomes drawn from
/// `truth`, and the index of the best candidate. For a proper rule the
/// argmax sits at `truth` whenever it is among the candidates.
struct ProprietyResult {
  std::size_t argmax = 0;
  std::vector<double> expected;  // -inf allowed
};

/// Candidates must be non-empty and share the truth's dimension. The
/// log-family rules require `truth` itself to have no zero mass.
ProprietyResult propriety_probe(const ProbabilityVector& truth, Rule rule,
                                const std::vector<ProbabilityVector>& candidates);

}  // namespace extropy::scoring
