#include "extropy/cli_render.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extropy/continuum.hpp"
#include "extropy/measures.hpp"
#include "extropy/text_format.hpp"

namespace extropy::cli {
namespace {

using io::format_number;
using io::JsonWriter;
using io::TableWriter;

char separator_for(OutputFormat format) {
  return format == OutputFormat::kCsv ? ',' : '\t';
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = comma == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, comma - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
      item.remove_prefix(1);
    }
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) {
      item.remove_suffix(1);
    }
    items.push_back(item);
    if (comma == std::string_view::npos) {
      return items;
    }
    start = comma + 1;
  }
}

double parse_double_item(std::string_view item, const char* what,
                         std::size_t position) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(item.data(), item.data() + item.size(), value);
  if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
    throw std::invalid_argument(std::string(what) + " " +
                                std::to_string(position) + " is not a number");
  }
  return value;
}

const char* bool_text(bool value) { return value ? "true" : "false"; }

void json_extended(JsonWriter& writer, const ExtendedNonNegative& value) {
  writer.begin_object();
  writer.key("value").number(value.value());
  writer.key("finite").boolean(!value.is_infinite());
  writer.end_object();
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") {
    return OutputFormat::kJson;
  }
  if (name == "csv") {
    return OutputFormat::kCsv;
  }
  if (name == "tsv") {
    return OutputFormat::kTsv;
  }
  throw std::invalid_argument("unknown output format '" + name +
                              "' (expected csv, json or tsv)");
}

std::string output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    default:
      return "tsv";
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed while reading '" + path + "'");
  }
  return std::move(buffer).str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoError("failed while writing '" + path + "'");
  }
}

ProbabilityVector parse_pmf_argument(const std::string& text) {
  const auto items = split_list(text);
  std::vector<double> masses;
  masses.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    masses.push_back(parse_double_item(items[i], "mass", i + 1));
  }
  return ProbabilityVector(std::move(masses));
}

std::vector<std::size_t> parse_grid_argument(const std::string& text) {
  const auto items = split_list(text);
  std::vector<std::size_t> counts;
  counts.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(
        items[i].data(), items[i].data() + items[i].size(), value);
    if (items[i].empty() || ec != std::errc{} ||
        ptr != items[i].data() + items[i].size()) {
      throw std::invalid_argument("node count " + std::to_string(i + 1) +
                                  " is not an integer");
    }
    if (value < 2) {
      throw std::invalid_argument("node counts must be at least 2");
    }
    if (!counts.empty() && value <= counts.back()) {
      throw std::invalid_argument("node counts must be strictly increasing");
    }
    counts.push_back(value);
  }
  return counts;
}

MeasureReport measure_report(const ProbabilityVector& pmf) {
  MeasureReport report{.pmf = pmf};
  const std::size_t n = pmf.size();
  report.entropy = entropy(pmf);
  report.extropy = extropy(pmf);
  report.sum = report.entropy + report.extropy;
  report.gap = report.entropy - report.extropy;
  report.max_entropy = std::log(static_cast<double>(n));
  report.max_extropy = max_extropy_value(n);
  if (n >= 2) {
    const ProbabilityVector q = complement(pmf);
    const double scale = static_cast<double>(n - 1);
    report.complement = q;
    report.extropy_via_complement = scale * (entropy(q) - std::log(scale));
    report.reconstruction_residual =
        report.extropy - *report.extropy_via_complement;
  }
  return report;
}

std::string render_measure(const MeasureReport& report, OutputFormat format) {
  const std::size_t n = report.pmf.size();
  if (format == OutputFormat::kJson) {
    JsonWriter writer;
    writer.begin_object();
    writer.key("dimension").integer(static_cast<long long>(n));
    writer.key("masses").begin_array();
    for (const double mass : report.pmf.masses()) {
      writer.number(mass);
    }
    writer.end_array();
    writer.key("entropy").number(report.entropy);
    writer.key("extropy").number(report.extropy);
    writer.key("sum").number(report.sum);
    writer.key("gap").number(report.gap);
    writer.key("max_entropy").number(report.max_entropy);
    writer.key("max_extropy").number(report.max_extropy);
    writer.key("complement");
    if (report.complement) {
      writer.begin_array();
      for (const double mass : report.complement->masses()) {
        writer.number(mass);
      }
      writer.end_array();
    } else {
      writer.null();
    }
    writer.key("extropy_via_complement");
    report.extropy_via_complement ? writer.number(*report.extropy_via_complement)
                                  : writer.null();
    writer.key("reconstruction_residual");
    report.reconstruction_residual ? writer.number(*report.reconstruction_residual)
                                   : writer.null();
    writer.end_object();
    return writer.take();
  }

  TableWriter table(separator_for(format));
  table.cell("key").cell("value").end_row();
  table.cell("dimension").cell(n).end_row();
  for (std::size_t i = 0; i < n; ++i) {
    table.cell("mass_" + std::to_string(i + 1)).cell(report.pmf[i]).end_row();
  }
  table.cell("entropy").cell(report.entropy).end_row();
  table.cell("extropy").cell(report.extropy).end_row();
  table.cell("sum").cell(report.sum).end_row();
  table.cell("gap").cell(report.gap).end_row();
  table.cell("max_entropy").cell(report.max_entropy).end_row();
  table.cell("max_extropy").cell(report.max_extropy).end_row();
  if (report.complement) {
    for (std::size_t i = 0; i < n; ++i) {
      table.cell("complement_" + std::to_string(i + 1))
          .cell((*report.complement)[i])
          .end_row();
    }
    table.cell("extropy_via_complement")
        .cell(*report.extropy_via_complement)
        .end_row();
    table.cell("reconstruction_residual")
        .cell(*report.reconstruction_residual)
        .end_row();
  }
  return table.take();
}

DivergeMode parse_diverge_mode(const std::string& name) {
  if (name == "kl") {
    return DivergeMode::kKl;
  }
  if (name == "ckl") {
    return DivergeMode::kCkl;
  }
  if (name == "euclid") {
    return DivergeMode::kEuclid;
  }
  if (name == "all") {
    return DivergeMode::kAll;
  }
  throw std::invalid_argument("unknown divergence mode '" + name +
                              "' (expected kl, ckl, euclid or all)");
}

std::string diverge_mode_name(DivergeMode mode) {
  switch (mode) {
    case DivergeMode::kKl:
      return "kl";
    case DivergeMode::kCkl:
      return "ckl";
    case DivergeMode::kEuclid:
      return "euclid";
    default:
      return "all";
  }
}

DivergeReport diverge_report(const ProbabilityVector& p,
                             const ProbabilityVector& s, DivergeMode mode) {
  if (p.size() != s.size()) {
    throw std::invalid_argument("pmfs must share one dimension");
  }
  DivergeReport report;
  report.mode = mode;
  report.dimension = p.size();
  const bool want_kl = mode == DivergeMode::kKl || mode == DivergeMode::kAll;
  const bool want_ckl = mode == DivergeMode::kCkl || mode == DivergeMode::kAll;
  const bool want_euclid =
      mode == DivergeMode::kEuclid || mode == DivergeMode::kAll;
  if (want_kl) {
    report.kl = kl_divergence(p, s);
  }
  if (want_ckl) {
    report.ckl = complementary_divergence(p, s);
  }
  if (want_euclid) {
    report.euclid = half_euclidean(p, s);
  }
  if (mode != DivergeMode::kAll) {
    return report;
  }

  const std::size_t n = p.size();
  if (!report.kl->is_infinite()) {
    double shift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] != s[i]) {
        shift -= (p[i] - s[i]) * std::log(s[i]);
      }
    }
    report.kl_expectation_residual =
        report.kl->value() - (entropy(s) - entropy(p) + shift);
  }
  if (!report.ckl->is_infinite()) {
    double shift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] != s[i]) {
        shift += (s[i] - p[i]) * std::log1p(-s[i]);
      }
    }
    report.ckl_expectation_residual =
        report.ckl->value() - (extropy(s) - extropy(p) + shift);

    const ExtendedNonNegative complement_kl =
        kl_divergence(complement(p), complement(s));
    if (!complement_kl.is_infinite()) {
      report.ckl_complement_residual =
          report.ckl->value() -
          static_cast<double>(n - 1) * complement_kl.value();
    }

    const double ckl = report.ckl->value();
    const double gap_value =
        ckl == 0.0 ? 0.0 : std::fabs(ckl - *report.euclid) / ckl;
    report.euclid_ckl_relative_gap = gap_value;
    report.euclid_approximates_ckl = gap_value < 0.02;
  }
  return report;
}

std::string render_diverge(const DivergeReport& report, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    JsonWriter writer;
    writer.begin_object();
    writer.key("mode").string_value(diverge_mode_name(report.mode));
    writer.key("dimension").integer(static_cast<long long>(report.dimension));
    writer.key("kl");
    if (report.kl) {
      json_extended(writer, *report.kl);
    } else {
      writer.null();
    }
    writer.key("ckl");
    if (report.ckl) {
      json_extended(writer, *report.ckl);
    } else {
      writer.null();
    }
    writer.key("euclid");
    report.euclid ? writer.number(*report.euclid) : writer.null();
    writer.key("kl_expectation_residual");
    report.kl_expectation_residual ? writer.number(*report.kl_expectation_residual)
                                   : writer.null();
    writer.key("ckl_expectation_residual");
    report.ckl_expectation_residual
        ? writer.number(*report.ckl_expectation_residual)
        : writer.null();
    writer.key("ckl_complement_residual");
    report.ckl_complement_residual
        ? writer.number(*report.ckl_complement_residual)
        : writer.null();
    writer.key("euclid_ckl_relative_gap");
    report.euclid_ckl_relative_gap ? writer.number(*report.euclid_ckl_relative_gap)
                                   : writer.null();
    writer.key("euclid_approximates_ckl");
    report.euclid_approximates_ckl
        ? writer.boolean(*report.euclid_approximates_ckl)
        : writer.null();
    writer.end_object();
    return writer.take();
  }

  TableWriter table(separator_for(format));
  table.cell("key").cell("value").cell("finite").end_row();
  table.cell("mode").cell(diverge_mode_name(report.mode)).cell("").end_row();
  table.cell("dimension").cell(report.dimension).cell("").end_row();
  const auto extended_row = [&table](std::string_view key,
                                     const std::optional<ExtendedNonNegative>&
                                         value) {
    table.cell(key);
    if (value) {
      table.cell(value->value()).cell(bool_text(!value->is_infinite()));
    } else {
      table.cell("").cell("");
    }
    table.end_row();
  };
  extended_row("kl", report.kl);
  extended_row("ckl", report.ckl);
  const auto number_row = [&table](std::string_view key,
                                   const std::optional<double>& value) {
    table.cell(key);
    if (value) {
      table.cell(*value).cell("true");
    } else {
      table.cell("").cell("");
    }
    table.end_row();
  };
  number_row("euclid", report.euclid);
  number_row("kl_expectation_residual", report.kl_expectation_residual);
  number_row("ckl_expectation_residual", report.ckl_expectation_residual);
  number_row("ckl_complement_residual", report.ckl_complement_residual);
  number_row("euclid_ckl_relative_gap", report.euclid_ckl_relative_gap);
  table.cell("euclid_approximates_ckl");
  if (report.euclid_approximates_ckl) {
    table.cell(bool_text(*report.euclid_approximates_ckl));
  } else {
    table.cell("");
  }
  table.cell("").end_row();
  return table.take();
}

std::string render_score(const std::vector<ForecasterScores>& forecasters,
                         const std::vector<scoring::Rule>& rules,
                         OutputFormat format) {
  if (format == OutputFormat::kJson) {
    JsonWriter writer;
    writer.begin_object();
    writer.key("rules").begin_array();
    for (const scoring::Rule rule : rules) {
      writer.string_value(scoring::rule_name(rule));
    }
    writer.end_array();
    writer.key("forecasters").begin_array();
    for (const ForecasterScores& forecaster : forecasters) {
      writer.begin_object();
      writer.key("label").string_value(forecaster.label);
      writer.key("record_count")
          .integer(static_cast<long long>(forecaster.report.record_count));
      writer.key("warnings").begin_array();
      for (const std::string& warning : forecaster.warnings) {
        writer.string_value(warning);
      }
      writer.end_array();
      writer.key("records").begin_array();
      const auto& entries = forecaster.report.per_record;
      for (std::size_t start = 0; start < entries.size();
           start += rules.size()) {
        writer.begin_object();
        writer.key("id").string_value(entries[start].id);
        writer.key("scores").begin_array();
        for (std::size_t k = 0; k < rules.size(); ++k) {
          const scoring::ScoreEntry& entry = entries[start + k];
          writer.begin_object();
          writer.key("rule").string_value(scoring::rule_name(entry.rule));
          writer.key("value").number(entry.value);
          writer.key("finite").boolean(entry.finite);
          writer.end_object();
        }
        writer.end_array();
        writer.end_object();
      }
      writer.end_array();
      writer.key("totals").begin_array();
      for (const scoring::RuleTotal& total : forecaster.report.totals) {
        writer.begin_object();
        writer.key("rule").string_value(scoring::rule_name(total.rule));
        writer.key("value").number(total.value);
        writer.key("finite").boolean(total.finite);
        writer.end_object();
      }
      writer.end_array();
      writer.end_object();
    }
    writer.end_array();
    writer.end_object();
    return writer.take();
  }

  TableWriter table(separator_for(format));
  table.cell("forecaster")
      .cell("kind")
      .cell("id")
      .cell("rule")
      .cell("value")
      .cell("finite")
      .end_row();
  for (const ForecasterScores& forecaster : forecasters) {
    for (const scoring::ScoreEntry& entry : forecaster.report.per_record) {
      table.cell(forecaster.label)
          .cell("record")
          .cell(entry.id)
          .cell(scoring::rule_name(entry.rule))
          .cell(entry.value)
          .cell(bool_text(entry.finite))
          .end_row();
    }
    for (const scoring::RuleTotal& total : forecaster.report.totals) {
      table.cell(forecaster.label)
          .cell("total")
          .cell("")
          .cell(scoring::rule_name(total.rule))
          .cell(total.value)
          .cell(bool_text(total.finite))
          .end_row();
    }
  }
  return table.take();
}

std::string render_contours(const ContourGrid& grid, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    JsonWriter writer;
    writer.begin_object();
    writer.key("resolution").integer(static_cast<long long>(grid.resolution));
    writer.key("rows").begin_array();
    for (const ContourRow& row : grid.rows) {
      writer.begin_object();
      writer.key("p1").number(row.p1);
      writer.key("p2").number(row.p2);
      writer.key("p3").number(row.p3);
      writer.key("entropy").number(row.entropy);
      writer.key("extropy").number(row.extropy);
      writer.end_object();
    }
    writer.end_array();
    writer.end_object();
    return writer.take();
  }

  TableWriter table(separator_for(format));
  table.cell("p1").cell("p2").cell("p3").cell("entropy").cell("extropy").end_row();
  for (const ContourRow& row : grid.rows) {
    table.cell(row.p1)
        .cell(row.p2)
        .cell(row.p3)
        .cell(row.entropy)
        .cell(row.extropy)
        .end_row();
  }
  return table.take();
}

ContractReport contract_report(const ProbabilityVector& pmf,
                               std::size_t steps) {
  ContractReport report;
  report.dimension = pmf.size();
  report.steps = steps;
  report.contracting = complement_is_contraction(pmf.size());
  report.trajectory = iterate_complement(pmf, steps);
  report.distances.reserve(report.trajectory.size());
  for (const ProbabilityVector& state : report.trajectory) {
    report.distances.push_back(sup_distance_to_uniform(state));
  }
  return report;
}

std::string render_contract(const ContractReport& report, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    JsonWriter writer;
    writer.begin_object();
    writer.key("dimension").integer(static_cast<long long>(report.dimension));
    writer.key("steps").integer(static_cast<long long>(report.steps));
    writer.key("contracting").boolean(report.contracting);
    writer.key("trajectory").begin_array();
    for (std::size_t step = 0; step < report.trajectory.size(); ++step) {
      writer.begin_object();
      writer.key("step").integer(static_cast<long long>(step));
      writer.key("masses").begin_array();
      for (const double mass : report.trajectory[step].masses()) {
        writer.number(mass);
      }
      writer.end_array();
      writer.key("sup_distance_to_uniform").number(report.distances[step]);
      writer.end_object();
    }
    writer.end_array();
    writer.end_object();
    return writer.take();
  }

  TableWriter table(separator_for(format));
  table.cell("step").cell("sup_distance_to_uniform");
  for (std::size_t i = 0; i < report.dimension; ++i) {
    table.cell("mass_" + std::to_string(i + 1));
  }
  table.end_row();
  for (std::size_t step = 0; step < report.trajectory.size(); ++step) {
    table.cell(step).cell(report.distances[step]);
    for (const double mass : report.trajectory[step].masses()) {
      table.cell(mass);
    }
    table.end_row();
  }
  return table.take();
}

ContinuumReport continuum_report(const DensityGrid& f, const DensityGrid& g,
                                 const std::vector<std::size_t>& node_counts,
                                 double norm_tolerance) {
  if (!same_grid(f, g)) {
    throw std::invalid_argument("densities must share one grid");
  }
  if (node_counts.empty()) {
    throw std::invalid_argument("at least one node count is required");
  }
  // Targets come from the last entry, so the list must end at its finest.
  for (std::size_t k = 1; k < node_counts.size(); ++k) {
    if (node_counts[k] <= node_counts[k - 1]) {
      throw std::invalid_argument("node counts must be strictly increasing");
    }
  }

  ContinuumReport report;
  report.lower = f.lower();
  report.upper = f.upper();

  std::vector<DensityGrid> f_family;
  std::vector<DensityGrid> g_family;
  f_family.reserve(node_counts.size());
  g_family.reserve(node_counts.size());
  for (const std::size_t nodes : node_counts) {
    f_family.push_back(subsample(f, nodes, norm_tolerance));
    g_family.push_back(subsample(g, nodes, norm_tolerance));
  }

  const DensityGrid& f_finest = f_family.back();
  const DensityGrid& g_finest = g_family.back();
  report.entropy_target = differential_entropy(f_finest);
  report.extropy_target = differential_extropy(f_finest);
  report.dc_target = relative_extropy_density(f_finest, g_finest);

  report.rows.reserve(node_counts.size());
  for (std::size_t k = 0; k < node_counts.size(); ++k) {
    const DensityGrid& f_k = f_family[k];
    const DensityGrid& g_k = g_family[k];
    ContinuumRow row;
    row.nodes = f_k.size();
    row.delta_x = f_k.delta_x();
    row.entropy_f = differential_entropy(f_k);
    row.extropy_f = differential_extropy(f_k);
    row.entropy_g = differential_entropy(g_k);
    row.extropy_g = differential_extropy(g_k);
    row.d = relative_entropy_density(f_k, g_k);
    row.dc = relative_extropy_density(f_k, g_k);

    const ProbabilityVector p = discretize(f_k).pmf;
    const ProbabilityVector s = discretize(g_k).pmf;
    row.entropy_probe = entropy(p) + std::log(row.delta_x);
    row.entropy_probe_error = std::fabs(row.entropy_probe - report.entropy_target);
    row.extropy_probe = (extropy(p) - 1.0) / row.delta_x;
    row.extropy_probe_error = std::fabs(row.extropy_probe - report.extropy_target);
    row.dc_probe = complementary_divergence(p, s).value() / row.delta_x;
    row.dc_probe_error = std::fabs(row.dc_probe - report.dc_target);

    if (!row.d.is_infinite()) {
      std::vector<double> cross_samples(f_k.size(), 0.0);
      for (std::size_t i = 0; i < f_k.size(); ++i) {
        if (f_k.value(i) > 0.0) {
          cross_samples[i] = f_k.value(i) * std::log(g_k.value(i));
        }
      }
      const double cross = trapezoid(f_k, cross_samples);
      row.d_identity_residual = row.d.value() - (-row.entropy_f - cross);
    }
    std::vector<double> square_samples(f_k.size(), 0.0);
    for (std::size_t i = 0; i < f_k.size(); ++i) {
      square_samples[i] = (g_k.value(i) - f_k.value(i)) * g_k.value(i);
    }
    const double shift = trapezoid(f_k, square_samples);
    row.dc_identity_residual =
        row.dc - (row.extropy_g - row.extropy_f + shift);

    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_continuum(const ContinuumReport& report,
                             OutputFormat format) {
  if (format == OutputFormat::kJson) {
    JsonWriter writer;
    writer.begin_object();
    writer.key("lower").number(report.lower);
    writer.key("upper").number(report.upper);
    writer.key("targets").begin_object();
    writer.key("entropy").number(report.entropy_target);
    writer.key("extropy").number(report.extropy_target);
    writer.key("dc").number(report.dc_target);
    writer.end_object();
    writer.key("rows").begin_array();
    for (const ContinuumRow& row : report.rows) {
      writer.begin_object();
      writer.key("nodes").integer(static_cast<long long>(row.nodes));
      writer.key("delta_x").number(row.delta_x);
      writer.key("entropy_f").number(row.entropy_f);
      writer.key("extropy_f").number(row.extropy_f);
      writer.key("entropy_g").number(row.entropy_g);
      writer.key("extropy_g").number(row.extropy_g);
      writer.key("d");
      json_extended(writer, row.d);
      writer.key("dc").number(row.dc);
      writer.key("entropy_probe").number(row.entropy_probe);
      writer.key("entropy_probe_error").number(row.entropy_probe_error);
      writer.key("extropy_probe").number(row.extropy_probe);
      writer.key("extropy_probe_error").number(row.extropy_probe_error);
      writer.key("dc_probe").number(row.dc_probe);
      writer.key("dc_probe_error").number(row.dc_probe_error);
      writer.key("d_identity_residual");
      row.d_identity_residual ? writer.number(*row.d_identity_residual)
                              : writer.null();
      writer.key("dc_identity_residual").number(row.dc_identity_residual);
      writer.end_object();
    }
    writer.end_array();
    writer.end_object();
    return writer.take();
  }

  TableWriter table(separator_for(format));
  table.cell("nodes")
      .cell("delta_x")
      .cell("entropy_f")
      .cell("extropy_f")
      .cell("entropy_g")
      .cell("extropy_g")
      .cell("d")
      .cell("d_finite")
      .cell("dc")
      .cell("entropy_probe")
      .cell("entropy_probe_error")
      .cell("extropy_probe")
      .cell("extropy_probe_error")
      .cell("dc_probe")
      .cell("dc_probe_error")
      .cell("d_identity_residual")
      .cell("dc_identity_residual")
      .end_row();
  for (const ContinuumRow& row : report.rows) {
    table.cell(row.nodes)
        .cell(row.delta_x)
        .cell(row.entropy_f)
        .cell(row.extropy_f)
        .cell(row.entropy_g)
        .cell(row.extropy_g)
        .cell(row.d.value())
        .cell(bool_text(!row.d.is_infinite()))
        .cell(row.dc)
        .cell(row.entropy_probe)
        .cell(row.entropy_probe_error)
        .cell(row.extropy_probe)
        .cell(row.extropy_probe_error)
        .cell(row.dc_probe)
        .cell(row.dc_probe_error);
    if (row.d_identity_residual) {
      table.cell(*row.d_identity_residual);
    } else {
      table.cell("");
    }
    table.cell(row.dc_identity_residual).end_row();
  }
  return table.take();
}

}  // namespace extropy::cli
