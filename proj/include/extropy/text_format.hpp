#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace extropy::io {

/// Fixed numeric rendering used by every emitter: finite values through
/// "%.10g" (10 significant digits), infinities as "inf" / "-inf", NaN as
/// "nan", negative zero normalized to "0".
std::string format_number(double value);

/// Minimal JSON emitter with caller-controlled field order. Numbers go
/// through format_number; infinite values are emitted as the JSON strings
/// "inf" / "-inf" because JSON has no infinity literal.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& number(double value);
  JsonWriter& integer(long long value);
  JsonWriter& string_value(std::string_view value);
  JsonWriter& boolean(bool value);
  JsonWriter& null();

  /// Finished document, terminated by a single LF.
  std::string take();

 private:
  void pre_value();
  void append_escaped(std::string_view text);

  std::string out_;
  std::vector<bool> needs_comma_;
  std::vector<bool> frame_is_object_;
  bool pending_key_ = false;
};

/// Row-oriented emitter for the csv / tsv output formats: one separator
/// between cells, LF after each row.
class TableWriter {
 public:
  explicit TableWriter(char separator);
  TableWriter& cell(std::string_view text);
  TableWriter& cell(double value);
  TableWriter& cell(std::size_t value);
  TableWriter& end_row();
  std::string take();

 private:
  char separator_;
  bool row_open_ = false;
  std::string out_;
};

}  // namespace extropy::io
