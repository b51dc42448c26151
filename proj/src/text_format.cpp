#include "extropy/text_format.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace extropy::io {

std::string format_number(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  if (value == 0.0) {
    return "0";  // folds -0 into 0
  }
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

JsonWriter& JsonWriter::begin_object() {
  pre_value();
  out_ += '{';
  needs_comma_.push_back(false);
  frame_is_object_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  if (needs_comma_.empty() || pending_key_ || !frame_is_object_.back()) {
    throw std::logic_error("unbalanced end_object");
  }
  needs_comma_.pop_back();
  frame_is_object_.pop_back();
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  pre_value();
  out_ += '[';
  needs_comma_.push_back(false);
  frame_is_object_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  if (needs_comma_.empty() || pending_key_ || frame_is_object_.back()) {
    throw std::logic_error("unbalanced end_array");
  }
  needs_comma_.pop_back();
  frame_is_object_.pop_back();
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  if (pending_key_ || needs_comma_.empty() || !frame_is_object_.back()) {
    throw std::logic_error("key outside object");
  }
  if (needs_comma_.back()) {
    out_ += ',';
  }
  needs_comma_.back() = true;
  out_ += '"';
  append_escaped(name);
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::number(double value) {
  if (std::isfinite(value)) {
    pre_value();
    out_ += format_number(value);
    return *this;
  }
  return string_value(format_number(value));
}

JsonWriter& JsonWriter::integer(long long value) {
  pre_value();
  out_ += std::to_string(value);
  return *this;
}

JsonWriter& JsonWriter::string_value(std::string_view value) {
  pre_value();
  out_ += '"';
  append_escaped(value);
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::boolean(bool value) {
  pre_value();
  out_ += value ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::null() {
  pre_value();
  out_ += "null";
  return *this;
}

std::string JsonWriter::take() {
  if (!needs_comma_.empty() || pending_key_) {
    throw std::logic_error("unfinished json document");
  }
  out_ += '\n';
  return std::move(out_);
}

void JsonWriter::pre_value() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!needs_comma_.empty()) {
    if (needs_comma_.back()) {
      out_ += ',';
    }
    needs_comma_.back() = true;
  }
}

void JsonWriter::append_escaped(std::string_view text) {
  for (const char c : text) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\r': out_ += "\\r"; break;
      case '\t': out_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out_ += buffer;
        } else {
          out_ += c;
        }
    }
  }
}

TableWriter::TableWriter(char separator) : separator_(separator) {}

TableWriter& TableWriter::cell(std::string_view text) {
  if (row_open_) {
    out_ += separator_;
  }
  row_open_ = true;
  out_ += text;
  return *this;
}

TableWriter& TableWriter::cell(double value) {
  return cell(format_number(value));
}

TableWriter& TableWriter::cell(std::size_t value) {
  return cell(std::string_view{std::to_string(value)});
}

TableWriter& TableWriter::end_row() {
  out_ += '\n';
  row_open_ = false;
  return *this;
}

std::string TableWriter::take() {
  return std::move(out_);
}

}  // namespace extropy::io
