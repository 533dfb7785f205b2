#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace amgm::cli {

// Minimal JSON value with a deterministic serializer: object keys are kept
// sorted, floats are written with 17 significant digits via to_chars, and
// nothing depends on the locale. Byte-identical output for equal values is
// a contract here, which is why an off-the-shelf serializer is not used.
class Json {
 public:
  Json() : value_(nullptr) {}

  static Json null() { return Json(); }
  static Json boolean(bool b) { return Json(Value(b)); }
  static Json integer(std::int64_t i) { return Json(Value(i)); }
  static Json unsigned_integer(std::uint64_t u) { return Json(Value(u)); }
  // NaN and infinities are not JSON; they serialize as null.
  static Json real(double d) { return Json(Value(d)); }
  static Json string(std::string s) { return Json(Value(std::move(s))); }
  static Json array() { return Json(Value(Array{})); }
  static Json object() { return Json(Value(Object{})); }

  bool is_object() const { return std::holds_alternative<Object>(value_); }
  bool is_array() const { return std::holds_alternative<Array>(value_); }

  // Object insert-or-replace; keeps keys sorted. Throws std::logic_error if
  // this value is not an object (programming error, not input validation).
  void set(std::string key, Json value);

  // Array append; throws std::logic_error if this value is not an array.
  void push(Json value);

  // Serialize with 2-space indentation and no trailing newline.
  std::string dump() const;

  // printf %.17g equivalent, locale-free; "null" for non-finite input.
  static std::string format_double(double v);

 private:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;
  using Value = std::variant<std::nullptr_t, bool, std::int64_t,
                             std::uint64_t, double, std::string, Array,
                             Object>;

  explicit Json(Value value) : value_(std::move(value)) {}

  void write(std::string& out, int depth) const;

  Value value_;
};

}  // namespace amgm::cli
