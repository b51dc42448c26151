#include "extropy/forecast_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "extropy/text_format.hpp"

namespace extropy::io {
namespace {

std::string_view trim(std::string_view field) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
    field.remove_prefix(1);
  }
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
    field.remove_suffix(1);
  }
  return field;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::optional<double> parse_double(std::string_view field) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> parse_index(std::string_view field) {
  std::size_t value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    return std::nullopt;
  }
  return value;
}

ForecastFile parse_csv(std::istream& in) {
  ForecastFile file;
  file.format = ForecastFormat::kCsv;

  std::string line;
  std::size_t line_number = 0;
  std::size_t dimension = 0;
  bool saw_header = false;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (trim(line).empty()) {
      continue;
    }
    const std::vector<std::string_view> fields = split_csv(line);
    if (!saw_header) {
      if (fields.size() < 3 || fields.front() != "id" || fields.back() != "outcome") {
        throw ParseError(
            "header must be id,p1,...,pn,outcome with at least one mass column",
            line_number);
      }
      dimension = fields.size() - 2;
      saw_header = true;
      continue;
    }
    if (fields.size() != dimension + 2) {
      throw ParseError("expected " + std::to_string(dimension + 2) +
                           " fields, found " + std::to_string(fields.size()),
                       line_number);
    }
    if (fields.front().empty()) {
      throw ParseError("record id must be non-empty", line_number);
    }
    std::vector<double> masses;
    masses.reserve(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
      const auto mass = parse_double(fields[i + 1]);
      if (!mass) {
        throw ParseError("mass column " + std::to_string(i + 1) +
                             " is not a number",
                         line_number);
      }
      masses.push_back(*mass);
    }
    const auto outcome = parse_index(fields.back());
    if (!outcome || *outcome >= dimension) {
      throw ParseError("outcome must be an integer in [0, " +
                           std::to_string(dimension) + ")",
                       line_number);
    }
    try {
      file.records.push_back(scoring::ForecastRecord{
          std::string(fields.front()), ProbabilityVector(std::move(masses)),
          *outcome});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_number);
    }
    file.source_rows.push_back(line_number);
  }
  if (!saw_header) {
    file.warnings.emplace_back("empty forecast file: no header, no records");
  } else if (file.records.empty()) {
    file.warnings.emplace_back("forecast file has a header but no records");
  }
  return file;
}

ForecastFile parse_json(std::istream& in) {
  ForecastFile file;
  file.format = ForecastFormat::kJson;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid json: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array()) {
    throw ParseError("document must be an object with a records array", 0);
  }
  std::size_t ordinal = 0;
  for (const auto& entry : doc["records"]) {
    ++ordinal;
    if (!entry.is_object() || !entry.contains("id") || !entry.contains("forecast") ||
        !entry.contains("outcome")) {
      throw ParseError("record needs id, forecast and outcome fields", ordinal);
    }
    if (!entry["id"].is_string() || entry["id"].get<std::string>().empty()) {
      throw ParseError("record id must be a non-empty string", ordinal);
    }
    if (!entry["forecast"].is_array() || entry["forecast"].empty()) {
      throw ParseError("forecast must be a non-empty array of masses", ordinal);
    }
    std::vector<double> masses;
    masses.reserve(entry["forecast"].size());
    for (const auto& mass : entry["forecast"]) {
      if (!mass.is_number()) {
        throw ParseError("forecast masses must be numbers", ordinal);
      }
      masses.push_back(mass.get<double>());
    }
    if (!entry["outcome"].is_number_integer() ||
        entry["outcome"].get<long long>() < 0 ||
        entry["outcome"].get<unsigned long long>() >= masses.size()) {
      throw ParseError("outcome must be an integer in [0, " +
                           std::to_string(masses.size()) + ")",
                       ordinal);
    }
    try {
      file.records.push_back(scoring::ForecastRecord{
          entry["id"].get<std::string>(), ProbabilityVector(std::move(masses)),
          entry["outcome"].get<std::size_t>()});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), ordinal);
    }
    file.source_rows.push_back(ordinal);
  }
  if (file.records.empty()) {
    file.warnings.emplace_back("forecast document has no records");
  }
  return file;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t row)
    : std::runtime_error("row " + std::to_string(row) + ": " + message),
      row_(row) {}

ForecastFormat parse_forecast_format(const std::string& name) {
  if (name == "csv") {
    return ForecastFormat::kCsv;
  }
  if (name == "json") {
    return ForecastFormat::kJson;
  }
  throw std::invalid_argument("unknown forecast format '" + name +
                              "' (expected csv or json)");
}

std::string forecast_format_name(ForecastFormat format) {
  return format == ForecastFormat::kCsv ? "csv" : "json";
}

ForecastFile parse_forecasts(std::istream& in, ForecastFormat format) {
  return format == ForecastFormat::kCsv ? parse_csv(in) : parse_json(in);
}

std::string serialize_forecasts_csv(
    const std::vector<scoring::ForecastRecord>& records) {
  if (records.empty()) {
    throw std::invalid_argument(
        "csv serialization needs at least one record to fix the dimension");
  }
  const std::size_t dimension = records.front().forecast.size();
  std::string out = "id";
  for (std::size_t i = 1; i <= dimension; ++i) {
    out += ",p" + std::to_string(i);
  }
  out += ",outcome\n";
  for (const auto& record : records) {
    if (record.forecast.size() != dimension) {
      throw std::invalid_argument(
          "csv serialization needs records of one shared dimension");
    }
    if (record.id.find_first_of(",\"\n\r") != std::string::npos) {
      throw std::invalid_argument("record id '" + record.id +
                                  "' contains csv separators");
    }
    out += record.id;
    for (std::size_t i = 0; i < dimension; ++i) {
      out += ',';
      out += format_number(record.forecast[i]);
    }
    out += ',' + std::to_string(record.outcome) + '\n';
  }
  return out;
}

std::string serialize_forecasts_json(
    const std::vector<scoring::ForecastRecord>& records) {
  JsonWriter writer;
  writer.begin_object();
  writer.key("records").begin_array();
  for (const auto& record : records) {
    writer.begin_object();
    writer.key("id").string_value(record.id);
    writer.key("forecast").begin_array();
    for (const double mass : record.forecast.masses()) {
      writer.number(mass);
    }
    writer.end_array();
    writer.key("outcome").integer(static_cast<long long>(record.outcome));
    writer.end_object();
  }
  writer.end_array();
  writer.end_object();
  return writer.take();
}

}  // namespace extropy::io
