#include "amgm/json.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace amgm::cli {
namespace {

void append_escaped(std::string& out, const std::string& s) {
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

void append_indent(std::string& out, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

}  // namespace

std::string Json::format_double(double v) {
  if (!std::isfinite(v)) return "null";
  // Collapse the two zeros so a parse/serialize round trip through readers
  // that treat "-0" as the integer 0 stays byte-stable.
  if (v == 0.0) return "0";
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void Json::set(std::string key, Json value) {
  auto* object = std::get_if<Object>(&value_);
  if (object == nullptr) {
    throw std::logic_error("Json::set called on a non-object");
  }
  const auto pos = std::lower_bound(
      object->begin(), object->end(), key,
      [](const auto& entry, const std::string& k) { return entry.first < k; });
  if (pos != object->end() && pos->first == key) {
    pos->second = std::move(value);
  } else {
    object->emplace(pos, std::move(key), std::move(value));
  }
}

void Json::push(Json value) {
  auto* array = std::get_if<Array>(&value_);
  if (array == nullptr) {
    throw std::logic_error("Json::push called on a non-array");
  }
  array->push_back(std::move(value));
}

void Json::write(std::string& out, int depth) const {
  struct Visitor {
    std::string& out;
    int depth;

    void operator()(std::nullptr_t) const { out += "null"; }
    void operator()(bool b) const { out += b ? "true" : "false"; }
    void operator()(std::int64_t i) const {
      std::array<char, 24> buf;
      const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), i);
      out.append(buf.data(), res.ptr);
    }
    void operator()(std::uint64_t u) const {
      std::array<char, 24> buf;
      const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), u);
      out.append(buf.data(), res.ptr);
    }
    void operator()(double d) const { out += format_double(d); }
    void operator()(const std::string& s) const { append_escaped(out, s); }
    void operator()(const Array& array) const {
      if (array.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < array.size(); ++i) {
        append_indent(out, depth + 1);
        array[i].write(out, depth + 1);
        if (i + 1 < array.size()) out += ',';
        out += '\n';
      }
      append_indent(out, depth);
      out += ']';
    }
    void operator()(const Object& object) const {
      if (object.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (std::size_t i = 0; i < object.size(); ++i) {
        append_indent(out, depth + 1);
        append_escaped(out, object[i].first);
        out += ": ";
        object[i].second.write(out, depth + 1);
        if (i + 1 < object.size()) out += ',';
        out += '\n';
      }
      append_indent(out, depth);
      out += '}';
    }
  };
  std::visit(Visitor{out, depth}, value_);
}

std::string Json::dump() const {
  std::string out;
  write(out, 0);
  return out;
}

}  // namespace amgm::cli
