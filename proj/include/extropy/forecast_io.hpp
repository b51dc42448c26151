#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "extropy/scoring.hpp"

namespace extropy::io {

/// Parse failure carrying the 1-based source row (CSV line, or JSON record
/// ordinal) that caused it; row 0 means the document as a whole.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t row);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

enum class ForecastFormat { kCsv, kJson };

/// Parses "csv" or "json"; throws std::invalid_argument otherwise.
ForecastFormat parse_forecast_format(const std::string& name);
std::string forecast_format_name(ForecastFormat format);

/// Parsed forecast file. Every record is fully validated; its source row is
/// kept alongside for error reporting downstream. An empty file yields an
/// empty record set plus a warning, not an error.
struct ForecastFile {
  ForecastFormat format = ForecastFormat::kCsv;
  std::vector<scoring::ForecastRecord> records;
  std::vector<std::size_t> source_rows;  // aligned with records
  std::vector<std::string> warnings;
};

/// CSV layout: header `id,p1,...,pn,outcome` fixing the dimension n, then
/// one record per line. JSON layout:
///   {"records": [{"id": .., "forecast": [..], "outcome": ..}, ...]}
/// where dimensions may vary per record.
ForecastFile parse_forecasts(std::istream& in, ForecastFormat format);

/// CSV serialization requires all records to share one dimension (the
/// header fixes it); ids must not contain separators or quotes.
std::string serialize_forecasts_csv(const std::vector<scoring::ForecastRecord>& records);
std::string serialize_forecasts_json(const std::vector<scoring::ForecastRecord>& records);

}  // namespace extropy::io
