#include "iepl/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace iepl {

namespace {

void escape_into(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  out += '"';
}

}  // namespace

std::string json_number(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("non-finite value has no JSON encoding");
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

JsonValue::JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
JsonValue::JsonValue(int v) : kind_(Kind::Int), int_(v) {}
JsonValue::JsonValue(long v) : kind_(Kind::Int), int_(v) {}
JsonValue::JsonValue(long long v) : kind_(Kind::Int), int_(v) {}
JsonValue::JsonValue(uint64_t v) : kind_(Kind::UInt), uint_(v) {}
JsonValue::JsonValue(double v) : kind_(Kind::Double), double_(v) {}
JsonValue::JsonValue(const char* s) : kind_(Kind::String), string_(s) {}
JsonValue::JsonValue(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Array;
  return v;
}

JsonValue& JsonValue::operator[](const std::string& key) {
  if (kind_ == Kind::Null) kind_ = Kind::Object;
  if (kind_ != Kind::Object) {
    throw std::logic_error("member access on a non-object JSON value");
  }
  for (auto& [k, v] : members_) {
    if (k == key) return v;
  }
  members_.emplace_back(key, JsonValue());
  return members_.back().second;
}

void JsonValue::push_back(JsonValue v) {
  if (kind_ == Kind::Null) kind_ = Kind::Array;
  if (kind_ != Kind::Array) {
    throw std::logic_error("push_back on a non-array JSON value");
  }
  items_.push_back(std::move(v));
}

void JsonValue::write(std::string& out, int indent, int depth) const {
  const std::string pad(indent > 0 ? indent * (depth + 1) : 0, ' ');
  const std::string close_pad(indent > 0 ? indent * depth : 0, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";

  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(int_); break;
    case Kind::UInt: out += std::to_string(uint_); break;
    case Kind::Double: out += json_number(double_); break;
    case Kind::String: escape_into(out, string_); break;
    case Kind::Array: {
      if (items_.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      out += nl;
      for (size_t i = 0; i < items_.size(); ++i) {
        out += pad;
        items_[i].write(out, indent, depth + 1);
        if (i + 1 < items_.size()) out += ',';
        out += nl;
      }
      out += close_pad;
      out += ']';
      break;
    }
    case Kind::Object: {
      if (members_.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      out += nl;
      for (size_t i = 0; i < members_.size(); ++i) {
        out += pad;
        escape_into(out, members_[i].first);
        out += colon;
        members_[i].second.write(out, indent, depth + 1);
        if (i + 1 < members_.size()) out += ',';
        out += nl;
      }
      out += close_pad;
      out += '}';
      break;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

}  // namespace iepl
