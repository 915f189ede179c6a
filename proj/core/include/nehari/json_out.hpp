#ifndef NEHARI_JSON_OUT_HPP
#define NEHARI_JSON_OUT_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace nehari {

/// Minimal ordered JSON document with fixed floating-point formatting
/// (17 significant digits), so identical inputs serialize byte-identically.
/// Non-finite numbers serialize as null.
class Json {
 public:
  static Json object() { return Json(Kind::Object); }
  static Json array() { return Json(Kind::Array); }
  static Json number(double v) {
    Json j(Kind::Number);
    j.num_ = v;
    return j;
  }
  static Json integer(long long v) {
    Json j(Kind::Integer);
    j.int_ = v;
    return j;
  }
  static Json boolean(bool v) {
    Json j(Kind::Bool);
    j.bool_ = v;
    return j;
  }
  static Json string(std::string v) {
    Json j(Kind::String);
    j.str_ = std::move(v);
    return j;
  }

  Json& set(const std::string& key, Json value);
  Json& push(Json value);

  std::string dump() const;

 private:
  enum class Kind { Object, Array, Number, Integer, Bool, String };
  explicit Json(Kind k) : kind_(k) {}
  void write(std::string& out) const;

  Kind kind_;
  double num_ = 0.0;
  long long int_ = 0;
  bool bool_ = false;
  std::string str_;
  std::vector<std::pair<std::string, Json>> members_;
  std::vector<Json> items_;
};

std::string format_double(double v);

}  // namespace nehari

#endif
