#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "extropy/text_format.hpp"

using extropy::io::format_number;
using extropy::io::JsonWriter;
using extropy::io::TableWriter;

TEST_CASE("format_number keeps ten significant digits") {
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.0397207708399179) == "1.039720771");
  CHECK(format_number(0.778096698957644) == "0.778096699");
  CHECK(format_number(-0.6931471805599453) == "-0.6931471806");
  CHECK(format_number(2.5e-8) == "2.5e-08");
  CHECK(format_number(1e300) == "1e+300");
}

TEST_CASE("format_number normalizes special values") {
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.0) == "0");
}

TEST_CASE("json writer emits fixed field order with LF terminator") {
  JsonWriter writer;
  writer.begin_object();
  writer.key("a").number(0.5);
  writer.key("b").begin_array();
  writer.integer(1);
  writer.integer(2);
  writer.end_array();
  writer.key("c").string_value("x");
  writer.key("d").boolean(true);
  writer.key("e").null();
  writer.end_object();
  CHECK(writer.take() == "{\"a\":0.5,\"b\":[1,2],\"c\":\"x\",\"d\":true,\"e\":null}\n");
}

TEST_CASE("json writer escapes control characters and quotes") {
  JsonWriter writer;
  writer.begin_object();
  writer.key("text").string_value("a\"b\\c\nd\te");
  writer.end_object();
  CHECK(writer.take() == "{\"text\":\"a\\\"b\\\\c\\nd\\te\"}\n");
}

TEST_CASE("json writer renders infinities as strings") {
  JsonWriter writer;
  writer.begin_array();
  writer.number(std::numeric_limits<double>::infinity());
  writer.number(-std::numeric_limits<double>::infinity());
  writer.end_array();
  CHECK(writer.take() == "[\"inf\",\"-inf\"]\n");
}

TEST_CASE("json writer rejects structural misuse") {
  JsonWriter unbalanced;
  unbalanced.begin_object();
  CHECK_THROWS_AS(unbalanced.end_array(), std::logic_error);

  JsonWriter dangling;
  dangling.begin_object();
  CHECK_THROWS_AS(dangling.take(), std::logic_error);

  JsonWriter stray_key;
  CHECK_THROWS_AS(stray_key.key("a"), std::logic_error);
}

TEST_CASE("table writer joins cells with the chosen separator") {
  TableWriter csv(',');
  csv.cell("h1").cell("h2").end_row();
  csv.cell(0.5).cell(std::size_t{7}).end_row();
  CHECK(csv.take() == "h1,h2\n0.5,7\n");

  TableWriter tsv('\t');
  tsv.cell("x").cell("y").end_row();
  CHECK(tsv.take() == "x\ty\n");
}
