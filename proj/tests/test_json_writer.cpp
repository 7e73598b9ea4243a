#include <cstdint>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "iepl/json_writer.hpp"
#include "json.hpp"

using iepl::JsonValue;

TEST_SUITE("json_writer") {

TEST_CASE("numbers print with 17 significant digits") {
  CHECK(iepl::json_number(2.0) == "2");
  CHECK(iepl::json_number(8.0 / 9.0) == "0.88888888888888884");
  CHECK(iepl::json_number(0.1) == "0.10000000000000001");
  CHECK(iepl::json_number(-1.5) == "-1.5");
  CHECK_THROWS_AS(iepl::json_number(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(iepl::json_number(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
}

TEST_CASE("scalar dumps") {
  CHECK(JsonValue().dump() == "null");
  CHECK(JsonValue(true).dump() == "true");
  CHECK(JsonValue(false).dump() == "false");
  CHECK(JsonValue(-5).dump() == "-5");
  CHECK(JsonValue(int64_t{1} << 62).dump() == "4611686018427387904");
  CHECK(JsonValue(std::numeric_limits<uint64_t>::max()).dump() ==
        "18446744073709551615");
  CHECK(JsonValue(0.5).dump() == "0.5");
  CHECK(JsonValue("hi").dump() == "\"hi\"");
  CHECK(JsonValue::array().dump() == "[]");
  CHECK(JsonValue::object().dump() == "{}");
}

TEST_CASE("objects keep insertion order and keys are unique") {
  JsonValue doc = JsonValue::object();
  doc["zebra"] = JsonValue(1);
  doc["alpha"] = JsonValue(2);
  doc["zebra"] = JsonValue(3);  // overwrites in place, keeps position
  CHECK(doc.dump() == "{\"zebra\":3,\"alpha\":2}");
}

TEST_CASE("null values promote on first structured use") {
  JsonValue doc;
  doc["auto"] = JsonValue(1);  // null -> object
  CHECK(doc.is_object());

  JsonValue arr;
  arr.push_back(JsonValue(1));  // null -> array
  CHECK(arr.is_array());

  CHECK_THROWS_AS(doc.push_back(JsonValue(2)), std::logic_error);
  CHECK_THROWS_AS(arr["key"], std::logic_error);
  JsonValue scalar(4);
  CHECK_THROWS_AS(scalar["key"], std::logic_error);
}

TEST_CASE("strings escape quotes, backslashes and control characters") {
  const JsonValue s(std::string("a\"b\\c\nd\te\x01"));
  CHECK(s.dump() == "\"a\\\"b\\\\c\\nd\\te\\u0001\"");
}

TEST_CASE("pretty printing indents nested structures") {
  JsonValue doc = JsonValue::object();
  doc["xs"].push_back(JsonValue(1));
  doc["xs"].push_back(JsonValue(2));
  doc["name"] = JsonValue("run");
  CHECK(doc.dump(2) ==
        "{\n  \"xs\": [\n    1,\n    2\n  ],\n  \"name\": \"run\"\n}");
  CHECK(doc.dump() == "{\"xs\":[1,2],\"name\":\"run\"}");
}

TEST_CASE("output parses back with identical values") {
  JsonValue doc = JsonValue::object();
  doc["ratio"] = JsonValue(8.0 / 9.0);
  doc["n"] = JsonValue(42);
  doc["flag"] = JsonValue(true);
  doc["label"] = JsonValue("x + 2*y = 8");
  JsonValue inner = JsonValue::object();
  inner["nested"] = JsonValue(0.1);
  doc["meta"] = std::move(inner);
  doc["empty"] = JsonValue::array();

  const auto parsed = nlohmann::json::parse(doc.dump(2));
  CHECK(parsed.at("ratio").get<double>() == 8.0 / 9.0);  // exact round-trip
  CHECK(parsed.at("n") == 42);
  CHECK(parsed.at("flag") == true);
  CHECK(parsed.at("label") == "x + 2*y = 8");
  CHECK(parsed.at("meta").at("nested").get<double>() == 0.1);
  CHECK(parsed.at("empty").is_array());
  CHECK(parsed.at("empty").empty());
}

}  // TEST_SUITE
