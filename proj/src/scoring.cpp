#include "extropy/scoring.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace extropy::scoring {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_outcome(const ProbabilityVector& forecast, std::size_t outcome) {
  if (outcome >= forecast.size()) {
    throw std::out_of_range("outcome index " + std::to_string(outcome) +
                            " exceeds dimension " + std::to_string(forecast.size()));
  }
}

}  // namespace

Rule parse_rule(const std::string& name) {
  if (name == "log") {
    return Rule::kLog;
  }
  if (name == "totallog") {
    return Rule::kTotalLog;
  }
  if (name == "quadratic") {
    return Rule::kQuadratic;
  }
  throw std::invalid_argument("unknown scoring rule '" + name +
                              "' (expected log, totallog or quadratic)");
}

std::string rule_name(Rule rule) {
  switch (rule) {
    case Rule::kLog: return "log";
    case Rule::kTotalLog: return "totallog";
    case Rule::kQuadratic: return "quadratic";
  }
  throw std::invalid_argument("unknown rule value");
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = {Rule::kLog, Rule::kTotalLog,
                                          Rule::kQuadratic};
  return rules;
}

double log_score(const ProbabilityVector& forecast, std::size_t outcome) {
  require_outcome(forecast, outcome);
  const double p = forecast[outcome];
  return p > 0.0 ? std::log(p) : kNegInf;
}

double total_log_score(const ProbabilityVector& forecast, std::size_t outcome) {
  require_outcome(forecast, outcome);
  double total = log_score(forecast, outcome);
  for (std::size_t i = 0; i < forecast.size(); ++i) {
    if (i == outcome) {
      continue;
    }
    if (forecast[i] >= 1.0) {
      return kNegInf;
    }
    total += std::log1p(-forecast[i]);
  }
  return total;
}

double quadratic_score(const ProbabilityVector& forecast, std::size_t outcome) {
  require_outcome(forecast, outcome);
  double sum_squares = 0.0;
  for (const double p : forecast.masses()) {
    sum_squares += p * p;
  }
  return 2.0 * forecast[outcome] - sum_squares;
}

double score(Rule rule, const ProbabilityVector& forecast, std::size_t outcome) {
  switch (rule) {
    case Rule::kLog: return log_score(forecast, outcome);
    case Rule::kTotalLog: return total_log_score(forecast, outcome);
    case Rule::kQuadratic: return quadratic_score(forecast, outcome);
  }
  throw std::invalid_argument("unknown rule value");
}

double expected_total_log(const ProbabilityVector& forecast) {
  double total = 0.0;
  for (std::size_t o = 0; o < forecast.size(); ++o) {
    if (forecast[o] > 0.0) {
      total += forecast[o] * total_log_score(forecast, o);
    }
  }
  return total;
}

ScoreReport score_sequence(const std::vector<ForecastRecord>& records,
                           const std::vector<Rule>& rules) {
  if (records.empty()) {
    throw std::invalid_argument("score sequence needs at least one record");
  }
  if (rules.empty()) {
    throw std::invalid_argument("score sequence needs at least one rule");
  }
  ScoreReport report;
  report.record_count = records.size();
  report.per_record.reserve(records.size() * rules.size());
  report.totals.reserve(rules.size());
  for (const Rule rule : rules) {
    report.totals.push_back({rule, 0.0, true});
  }
  for (const ForecastRecord& record : records) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const double value = score(rules[r], record.forecast, record.outcome);
      const bool finite = std::isfinite(value);
      report.per_record.push_back({record.id, rules[r], value, finite});
      report.totals[r].value += value;
      report.totals[r].finite = report.totals[r].finite && finite;
    }
  }
  return report;
}

ProprietyResult propriety_probe(const ProbabilityVector& truth, Rule rule,
                                const std::vector<ProbabilityVector>& candidates) {
  if (candidates.empty()) {
    throw std::invalid_argument("propriety probe needs at least one candidate");
  }
  if (rule != Rule::kQuadratic) {
    for (const double mass : truth.masses()) {
      if (mass == 0.0) {
        throw std::domain_error(
            "log-family expected scores need a truth with no zero mass");
      }
    }
  }
  ProprietyResult result;
  result.expected.reserve(candidates.size());
  for (const ProbabilityVector& candidate : candidates) {
    if (candidate.size() != truth.size()) {
      throw std::invalid_argument("candidate dimension differs from truth");
    }
    double expected = 0.0;
    for (std::size_t o = 0; o < truth.size(); ++o) {
      if (truth[o] > 0.0) {
        expected += truth[o] * score(rule, candidate, o);
      }
    }
    result.expected.push_back(expected);
  }
  for (std::size_t i = 1; i < result.expected.size(); ++i) {
    if (result.expected[i] > result.expected[result.argmax]) {
      result.argmax = i;
    }
  }
  return result;
}

}  // namespace extropy::scoring
