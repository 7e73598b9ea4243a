#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace iepl {

/// Minimal JSON document builder: keys keep insertion order and doubles are
/// printed with 17 significant digits so values round-trip exactly.
class JsonValue {
 public:
  JsonValue() = default;  // null
  JsonValue(bool b);
  JsonValue(int v);
  JsonValue(long v);
  JsonValue(long long v);
  JsonValue(uint64_t v);
  JsonValue(double v);
  JsonValue(const char* s);
  JsonValue(std::string s);

  static JsonValue object();
  static JsonValue array();

  bool is_object() const { return kind_ == Kind::Object; }
  bool is_array() const { return kind_ == Kind::Array; }

  /// Object access; inserts a null member when the key is absent.
  JsonValue& operator[](const std::string& key);
  void push_back(JsonValue v);

  /// indent > 0 pretty-prints; indent == 0 emits a single line.
  std::string dump(int indent = 0) const;

 private:
  enum class Kind { Null, Bool, Int, UInt, Double, String, Array, Object };

  void write(std::string& out, int indent, int depth) const;

  Kind kind_ = Kind::Null;
  bool bool_ = false;
  int64_t int_ = 0;
  uint64_t uint_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

/// %.17g with non-finite values rejected.
std::string json_number(double v);

}  // namespace iepl
