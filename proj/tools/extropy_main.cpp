// Command-line front end: measures, divergences, forecast scores, simplex
// contour grids, complement trajectories and density-pair diagnostics, all
// with deterministic csv / json / tsv output.

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extropy/cli_render.hpp"
#include "extropy/continuum.hpp"
#include "extropy/contours.hpp"
#include "extropy/density_grid.hpp"
#include "extropy/forecast_io.hpp"
#include "extropy/probability_vector.hpp"
#include "extropy/scoring.hpp"

namespace {

namespace cli = extropy::cli;
namespace io = extropy::io;

struct CommonOutput {
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* sub, CommonOutput& common) {
  sub->add_option("--format", common.format, "output format: csv, json or tsv")
      ->default_str("json");
  sub->add_option("--output", common.output,
                  "write to this file instead of stdout");
}

void emit(const CommonOutput& common, const std::string& content) {
  if (common.output.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  cli::write_text_file(common.output, content);
}

bool ends_with(const std::string& text, const std::string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// A pmf file is comma-separated masses on a single payload line; blank
/// lines and '#' comments are skipped.
extropy::ProbabilityVector load_pmf_file(const std::string& path) {
  const std::string text = cli::read_text_file(path);
  std::istringstream in(text);
  std::string line;
  std::string payload;
  bool found = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    if (found) {
      throw std::invalid_argument(path + ": expected a single line of masses");
    }
    payload = line;
    found = true;
  }
  if (!found) {
    throw std::invalid_argument(path + ": no masses found");
  }
  try {
    return cli::parse_pmf_argument(payload);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

extropy::ProbabilityVector resolve_pmf(const std::string& inline_text,
                                       const std::string& path) {
  if (inline_text.empty() == path.empty()) {
    throw std::invalid_argument("provide exactly one of --pmf and --input");
  }
  return inline_text.empty() ? load_pmf_file(path)
                             : cli::parse_pmf_argument(inline_text);
}

std::vector<extropy::scoring::Rule> resolve_rules(const std::string& text) {
  std::vector<extropy::scoring::Rule> rules;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    rules.push_back(extropy::scoring::parse_rule(item));
  }
  if (rules.empty()) {
    throw std::invalid_argument("at least one scoring rule is required");
  }
  return rules;
}

io::ForecastFile load_forecasts(const std::string& path,
                                const std::string& format_flag) {
  const io::ForecastFormat format =
      format_flag == "auto"
          ? (ends_with(path, ".json") ? io::ForecastFormat::kJson
                                      : io::ForecastFormat::kCsv)
          : io::parse_forecast_format(format_flag);
  const std::string text = cli::read_text_file(path);
  std::istringstream in(text);
  try {
    return io::parse_forecasts(in, format);
  } catch (const io::ParseError& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

extropy::DensityGrid load_density(const std::string& path,
                                  const std::string& format_flag,
                                  double norm_tolerance) {
  const bool json = format_flag == "auto" ? ends_with(path, ".json")
                                          : format_flag == "json";
  const std::string text = cli::read_text_file(path);
  std::istringstream in(text);
  try {
    return json ? extropy::read_density_json(in, norm_tolerance)
                : extropy::read_density_text(in, norm_tolerance);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "entropy / extropy measures, divergences, forecast scores and "
      "simplex diagnostics"};
  app.require_subcommand(1);

  // measure
  std::string measure_pmf;
  std::string measure_input;
  CommonOutput measure_out;
  CLI::App* measure_cmd = app.add_subcommand(
      "measure", "entropy, extropy and complement identities of one pmf");
  measure_cmd->add_option("--pmf", measure_pmf,
                          "comma-separated masses, e.g. 0.25,0.5,0.25");
  measure_cmd->add_option("--input", measure_input,
                          "file holding one line of comma-separated masses");
  add_common(measure_cmd, measure_out);

  // diverge
  std::string diverge_p;
  std::string diverge_s;
  std::string diverge_mode = "all";
  CommonOutput diverge_out;
  CLI::App* diverge_cmd = app.add_subcommand(
      "diverge", "divergences between two pmfs with identity residuals");
  diverge_cmd->add_option("--p", diverge_p, "first pmf (comma-separated)")
      ->required();
  diverge_cmd->add_option("--s", diverge_s, "second pmf (comma-separated)")
      ->required();
  diverge_cmd->add_option("--mode", diverge_mode,
                          "which divergences: kl, ckl, euclid or all")
      ->default_str("all");
  add_common(diverge_cmd, diverge_out);

  // score
  std::vector<std::string> score_files;
  std::string score_rules = "log,totallog,quadratic";
  std::string score_input_format = "auto";
  CommonOutput score_out;
  CLI::App* score_cmd = app.add_subcommand(
      "score", "score forecast files; several files compare side by side");
  score_cmd->add_option("files", score_files, "forecast files to score")
      ->required()
      ->expected(-1);
  score_cmd->add_option("--rules", score_rules,
                        "comma-separated rules: log, totallog, quadratic")
      ->default_str("log,totallog,quadratic");
  score_cmd->add_option("--input-format", score_input_format,
                        "forecast file format: auto, csv or json")
      ->default_str("auto");
  add_common(score_cmd, score_out);

  // contours
  std::size_t contours_resolution = 0;
  CommonOutput contours_out;
  CLI::App* contours_cmd = app.add_subcommand(
      "contours",
      "entropy / extropy over the barycentric lattice of the 3-simplex");
  contours_cmd
      ->add_option("--resolution", contours_resolution,
                   "lattice denominator (>= 2)")
      ->required();
  add_common(contours_cmd, contours_out);

  // contract
  std::string contract_pmf;
  std::string contract_input;
  std::size_t contract_steps = 1;
  CommonOutput contract_out;
  CLI::App* contract_cmd = app.add_subcommand(
      "contract", "iterate the complement map and track distance to uniform");
  contract_cmd->add_option("--pmf", contract_pmf,
                           "comma-separated masses, e.g. 0.25,0.5,0.25");
  contract_cmd->add_option("--input", contract_input,
                           "file holding one line of comma-separated masses");
  contract_cmd->add_option("--steps", contract_steps, "iteration count")
      ->default_str("1");
  add_common(contract_cmd, contract_out);

  // continuum
  std::string continuum_f;
  std::string continuum_g;
  std::string continuum_grid;
  std::string continuum_input_format = "auto";
  double continuum_norm_tol = 1e-3;
  CommonOutput continuum_out;
  CLI::App* continuum_cmd = app.add_subcommand(
      "continuum",
      "differential measures and discrete-to-continuum probes for a "
      "density pair");
  continuum_cmd->add_option("f", continuum_f, "density file (x<TAB>f or json)")
      ->required();
  continuum_cmd->add_option("g", continuum_g, "reference density file")
      ->required();
  continuum_cmd->add_option(
      "--grid", continuum_grid,
      "comma-separated node counts, e.g. 11,101,1001 (default: file "
      "resolution)");
  continuum_cmd
      ->add_option("--input-format", continuum_input_format,
                   "density file format: auto, text or json")
      ->default_str("auto");
  continuum_cmd
      ->add_option("--norm-tol", continuum_norm_tol,
                   "allowed quadrature distance from unit mass")
      ->default_str("0.001");
  add_common(continuum_cmd, continuum_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    if (measure_cmd->parsed()) {
      const extropy::ProbabilityVector pmf =
          resolve_pmf(measure_pmf, measure_input);
      emit(measure_out,
           cli::render_measure(cli::measure_report(pmf),
                               cli::parse_output_format(measure_out.format)));
    } else if (diverge_cmd->parsed()) {
      const extropy::ProbabilityVector p = cli::parse_pmf_argument(diverge_p);
      const extropy::ProbabilityVector s = cli::parse_pmf_argument(diverge_s);
      const cli::DivergeMode mode = cli::parse_diverge_mode(diverge_mode);
      emit(diverge_out,
           cli::render_diverge(cli::diverge_report(p, s, mode),
                               cli::parse_output_format(diverge_out.format)));
    } else if (score_cmd->parsed()) {
      if (score_input_format != "auto" && score_input_format != "csv" &&
          score_input_format != "json") {
        throw std::invalid_argument("unknown input format '" +
                                    score_input_format +
                                    "' (expected auto, csv or json)");
      }
      const std::vector<extropy::scoring::Rule> rules =
          resolve_rules(score_rules);
      std::vector<cli::ForecasterScores> forecasters;
      forecasters.reserve(score_files.size());
      for (const std::string& path : score_files) {
        const io::ForecastFile file = load_forecasts(path, score_input_format);
        cli::ForecasterScores entry{path, {}, file.warnings};
        if (!file.records.empty()) {
          entry.report = extropy::scoring::score_sequence(file.records, rules);
        }
        for (const std::string& warning : file.warnings) {
          std::fprintf(stderr, "warning: %s: %s\n", path.c_str(),
                       warning.c_str());
        }
        forecasters.push_back(std::move(entry));
      }
      emit(score_out,
           cli::render_score(forecasters, rules,
                             cli::parse_output_format(score_out.format)));
    } else if (contours_cmd->parsed()) {
      if (contours_resolution < 2) {
        throw std::invalid_argument("resolution must be at least 2");
      }
      emit(contours_out,
           cli::render_contours(extropy::make_contour_grid(contours_resolution),
                                cli::parse_output_format(contours_out.format)));
    } else if (contract_cmd->parsed()) {
      const extropy::ProbabilityVector pmf =
          resolve_pmf(contract_pmf, contract_input);
      emit(contract_out,
           cli::render_contract(cli::contract_report(pmf, contract_steps),
                                cli::parse_output_format(contract_out.format)));
    } else if (continuum_cmd->parsed()) {
      if (continuum_input_format != "auto" && continuum_input_format != "text" &&
          continuum_input_format != "json") {
        throw std::invalid_argument("unknown input format '" +
                                    continuum_input_format +
                                    "' (expected auto, text or json)");
      }
      const extropy::DensityGrid f =
          load_density(continuum_f, continuum_input_format, continuum_norm_tol);
      const extropy::DensityGrid g =
          load_density(continuum_g, continuum_input_format, continuum_norm_tol);
      const std::vector<std::size_t> node_counts =
          continuum_grid.empty() ? std::vector<std::size_t>{f.size()}
                                 : cli::parse_grid_argument(continuum_grid);
      emit(continuum_out,
           cli::render_continuum(
               cli::continuum_report(f, g, node_counts, continuum_norm_tol),
               cli::parse_output_format(continuum_out.format)));
    }
    return 0;
  } catch (const cli::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
