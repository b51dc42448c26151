#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extropy/contours.hpp"
#include "extropy/density_grid.hpp"
#include "extropy/divergence.hpp"
#include "extropy/probability_vector.hpp"
#include "extropy/scoring.hpp"

namespace extropy::cli {

/// Serialization target for every subcommand. Field order and numeric
/// rendering are fixed so identical inputs produce identical bytes.
enum class OutputFormat { kJson, kCsv, kTsv };

OutputFormat parse_output_format(const std::string& name);
std::string output_format_name(OutputFormat format);

/// Filesystem failure, as opposed to a validation failure; the process
/// front end maps the two onto different exit codes.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whole-file read / write. Throw IoError on any filesystem problem.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Comma-separated masses, e.g. "0.25,0.5,0.25". Strict numeric fields;
/// the result must satisfy the simplex invariants.
ProbabilityVector parse_pmf_argument(const std::string& text);

/// Comma-separated node counts, e.g. "11,101,1001". Each must be >= 2 and
/// the sequence strictly increasing.
std::vector<std::size_t> parse_grid_argument(const std::string& text);

/// Everything the measure subcommand reports about one pmf. Complement
/// fields are absent for the one-point pmf, where no complement exists.
struct MeasureReport {
  ProbabilityVector pmf;
  double entropy = 0.0;
  double extropy = 0.0;
  double sum = 0.0;  // entropy + extropy
  double gap = 0.0;  // entropy - extropy
  double max_entropy = 0.0;   // log n
  double max_extropy = 0.0;   // (n-1) log(n/(n-1))
  std::optional<ProbabilityVector> complement = std::nullopt;
  std::optional<double> extropy_via_complement = std::nullopt;  // (n-1)(H(q) - log(n-1))
  std::optional<double> reconstruction_residual = std::nullopt;
};

MeasureReport measure_report(const ProbabilityVector& pmf);
std::string render_measure(const MeasureReport& report, OutputFormat format);

enum class DivergeMode { kKl, kCkl, kEuclid, kAll };

DivergeMode parse_diverge_mode(const std::string& name);
std::string diverge_mode_name(DivergeMode mode);

/// Divergences between two pmfs. In kAll mode the cross-check residuals
/// are filled whenever the quantities they compare are finite:
///   kl_expectation_residual   kl  - (H(s) - H(p) + sum (p_i-s_i)(-log s_i))
///   ckl_expectation_residual  ckl - (J(s) - J(p) + sum (s_i-p_i)log(1-s_i))
///   ckl_complement_residual   ckl - (n-1) kl(complement(p), complement(s))
/// The relative gap compares euclid against ckl and flags the small-mass
/// regime where the quadratic approximation is within 2%.
struct DivergeReport {
  DivergeMode mode = DivergeMode::kAll;
  std::size_t dimension = 0;
  std::optional<ExtendedNonNegative> kl;
  std::optional<ExtendedNonNegative> ckl;
  std::optional<double> euclid;
  std::optional<double> kl_expectation_residual;
  std::optional<double> ckl_expectation_residual;
  std::optional<double> ckl_complement_residual;
  std::optional<double> euclid_ckl_relative_gap;
  std::optional<bool> euclid_approximates_ckl;
};

DivergeReport diverge_report(const ProbabilityVector& p,
                             const ProbabilityVector& s, DivergeMode mode);
std::string render_diverge(const DivergeReport& report, OutputFormat format);

/// One scored forecast file. An empty file yields an empty report plus a
/// warning; that is a success, not an error.
struct ForecasterScores {
  std::string label;
  scoring::ScoreReport report;
  std::vector<std::string> warnings;
};

/// Side-by-side rendering of one or more forecasters under a shared rule
/// list. `rules` must be the list every report was produced with.
std::string render_score(const std::vector<ForecasterScores>& forecasters,
                         const std::vector<scoring::Rule>& rules,
                         OutputFormat format);

std::string render_contours(const ContourGrid& grid, OutputFormat format);

/// Complement trajectory of a pmf: states 0..steps with the sup distance
/// to uniform for each. `contracting` records whether the map shrinks that
/// distance by the fixed 1/(n-1) factor (true from dimension 3 up).
struct ContractReport {
  std::size_t dimension = 0;
  std::size_t steps = 0;
  bool contracting = false;
  std::vector<ProbabilityVector> trajectory;
  std::vector<double> distances;
};

ContractReport contract_report(const ProbabilityVector& pmf, std::size_t steps);
std::string render_contract(const ContractReport& report, OutputFormat format);

/// One resolution step of the continuum subcommand: the differential
/// measures of both densities on the subsampled grid, the relative
/// measures, the discrete-to-continuum probes with their distance to the
/// finest-grid targets, and two identity residuals:
///   d_identity_residual   d  - (-h(f) - integral of f log g)
///   dc_identity_residual  dc - (j(g) - j(f) + integral of (g-f) g)
/// The d residual is absent when d is infinite.
struct ContinuumRow {
  std::size_t nodes = 0;
  double delta_x = 0.0;
  double entropy_f = 0.0;
  double extropy_f = 0.0;
  double entropy_g = 0.0;
  double extropy_g = 0.0;
  ExtendedNonNegative d;
  double dc = 0.0;
  double entropy_probe = 0.0;
  double entropy_probe_error = 0.0;
  double extropy_probe = 0.0;
  double extropy_probe_error = 0.0;
  double dc_probe = 0.0;
  double dc_probe_error = 0.0;
  std::optional<double> d_identity_residual;
  double dc_identity_residual = 0.0;
};

struct ContinuumReport {
  double lower = 0.0;
  double upper = 0.0;
  double entropy_target = 0.0;  // h(f) on the finest requested grid
  double extropy_target = 0.0;  // j(f) on the finest requested grid
  double dc_target = 0.0;       // d^c(f||g) on the finest requested grid
  std::vector<ContinuumRow> rows;
};

/// Subsamples both densities to every requested node count (each must
/// divide the stored grid evenly) and evaluates one row per count.
/// `node_counts` must be non-empty and strictly increasing.
ContinuumReport continuum_report(const DensityGrid& f, const DensityGrid& g,
                                 const std::vector<std::size_t>& node_counts,
                                 double norm_tolerance);
std::string render_continuum(const ContinuumReport& report,
                             OutputFormat format);

}  // namespace extropy::cli
