#include "extropy/density_grid.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "extropy/text_format.hpp"

namespace extropy {
namespace {

double trapezoid_raw(const std::vector<double>& samples, double delta_x) {
  double inner = 0.0;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    inner += samples[i];
  }
  return delta_x * (inner + 0.5 * (samples.front() + samples.back()));
}

}  // namespace

DensityGrid::DensityGrid(double lower, double upper, std::vector<double> values,
                         double norm_tolerance)
    : lower_(lower),
      upper_(upper),
      norm_tolerance_(norm_tolerance),
      values_(std::move(values)) {
  if (!(std::isfinite(lower_) && std::isfinite(upper_)) || !(upper_ > lower_)) {
    throw std::invalid_argument("density interval must satisfy lower < upper");
  }
  if (values_.size() < 2) {
    throw std::invalid_argument("density grid needs at least two nodes");
  }
  if (!(norm_tolerance_ >= 0.0)) {
    throw std::invalid_argument("normalization tolerance must be non-negative");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i])) {
      throw std::invalid_argument("density value " + std::to_string(i) +
                                  " is not a finite non-negative number");
    }
  }
  delta_x_ = (upper_ - lower_) / static_cast<double>(values_.size() - 1);
  const double mass = trapezoid_raw(values_, delta_x_);
  if (std::abs(mass - 1.0) > norm_tolerance_) {
    throw std::invalid_argument("density mass is " + std::to_string(mass) +
                                ", not 1 within the declared tolerance " +
                                std::to_string(norm_tolerance_));
  }
}

DensityGrid DensityGrid::normalized(double lower, double upper,
                                    std::vector<double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("density grid needs at least two nodes");
  }
  if (!(upper > lower)) {
    throw std::invalid_argument("density interval must satisfy lower < upper");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw std::invalid_argument("density value " + std::to_string(i) +
                                  " is not a finite non-negative number");
    }
  }
  const double delta_x = (upper - lower) / static_cast<double>(values.size() - 1);
  total = trapezoid_raw(values, delta_x);
  if (total <= 0.0) {
    throw std::invalid_argument("cannot normalize an all-zero density");
  }
  for (double& v : values) {
    v /= total;
  }
  return DensityGrid(lower, upper, std::move(values));
}

double DensityGrid::node(std::size_t i) const {
  if (i >= values_.size()) {
    throw std::out_of_range("node index out of range");
  }
  if (i + 1 == values_.size()) {
    return upper_;
  }
  return lower_ + static_cast<double>(i) * delta_x_;
}

double DensityGrid::quadrature() const {
  return trapezoid_raw(values_, delta_x_);
}

double trapezoid(const DensityGrid& grid, const std::vector<double>& samples) {
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("sample count does not match the grid");
  }
  return trapezoid_raw(samples, grid.delta_x());
}

bool same_grid(const DensityGrid& a, const DensityGrid& b) {
  return a.size() == b.size() && a.lower() == b.lower() && a.upper() == b.upper();
}

DensityGrid subsample(const DensityGrid& grid, std::size_t nodes,
                      double norm_tolerance) {
  if (nodes < 2) {
    throw std::invalid_argument("subsample needs at least two nodes");
  }
  if ((grid.size() - 1) % (nodes - 1) != 0) {
    throw std::invalid_argument(
        "cannot subsample " + std::to_string(grid.size()) + " nodes down to " +
        std::to_string(nodes) + ": intervals do not divide evenly");
  }
  const std::size_t stride = (grid.size() - 1) / (nodes - 1);
  std::vector<double> values;
  values.reserve(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    values.push_back(grid.value(i * stride));
  }
  return DensityGrid(grid.lower(), grid.upper(), std::move(values), norm_tolerance);
}

DensityGrid read_density_text(std::istream& in, double norm_tolerance) {
  std::vector<double> xs;
  std::vector<double> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    double x = 0.0;
    double f = 0.0;
    if (!(fields >> x >> f)) {
      throw std::invalid_argument("density text line " + std::to_string(line_number) +
                                  ": expected two numeric columns");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("density text line " + std::to_string(line_number) +
                                  ": unexpected trailing field '" + extra + "'");
    }
    xs.push_back(x);
    values.push_back(f);
  }
  if (xs.size() < 2) {
    throw std::invalid_argument("density text needs at least two data rows");
  }
  const double lower = xs.front();
  const double upper = xs.back();
  if (!(upper > lower)) {
    throw std::invalid_argument("density nodes must be strictly ascending");
  }
  const double step = (upper - lower) / static_cast<double>(xs.size() - 1);
  const double slack = 1e-6 * (upper - lower);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double expected = lower + static_cast<double>(i) * step;
    if (std::abs(xs[i] - expected) > slack) {
      throw std::invalid_argument("density node " + std::to_string(i) +
                                  " is not on a uniform grid");
    }
  }
  return DensityGrid(lower, upper, std::move(values), norm_tolerance);
}

std::string write_density_text(const DensityGrid& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += io::format_number(grid.node(i));
    out += '\t';
    out += io::format_number(grid.value(i));
    out += '\n';
  }
  return out;
}

DensityGrid read_density_json(std::istream& in, double norm_tolerance) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("density json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("lower") || !doc.contains("upper") ||
      !doc.contains("values")) {
    throw std::invalid_argument(
        "density json needs an object with lower, upper and values");
  }
  if (!doc["lower"].is_number() || !doc["upper"].is_number() ||
      !doc["values"].is_array()) {
    throw std::invalid_argument("density json fields have wrong types");
  }
  std::vector<double> values;
  values.reserve(doc["values"].size());
  for (const auto& v : doc["values"]) {
    if (!v.is_number()) {
      throw std::invalid_argument("density json values must be numbers");
    }
    values.push_back(v.get<double>());
  }
  return DensityGrid(doc["lower"].get<double>(), doc["upper"].get<double>(),
                     std::move(values), norm_tolerance);
}

std::string write_density_json(const DensityGrid& grid) {
  io::JsonWriter writer;
  writer.begin_object();
  writer.key("lower").number(grid.lower());
  writer.key("upper").number(grid.upper());
  writer.key("values").begin_array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    writer.number(grid.value(i));
  }
  writer.end_array();
  writer.end_object();
  return writer.take();
}

}  // namespace extropy
