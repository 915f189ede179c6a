#include "nehari/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace nehari {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json& Json::set(const std::string& key, Json value) {
  members_.emplace_back(key, std::move(value));
  return *this;
}

Json& Json::push(Json value) {
  items_.push_back(std::move(value));
  return *this;
}

namespace {
void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}
}  // namespace

void Json::write(std::string& out) const {
  switch (kind_) {
    case Kind::Number: out += format_double(num_); break;
    case Kind::Integer: out += std::to_string(int_); break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::String: write_escaped(out, str_); break;
    case Kind::Object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : members_) {
        if (!first) out += ',';
        first = false;
        write_escaped(out, k);
        out += ':';
        v.write(out);
      }
      out += '}';
      break;
    }
    case Kind::Array: {
      out += '[';
      bool first = true;
      for (const Json& v : items_) {
        if (!first) out += ',';
        first = false;
        v.write(out);
      }
      out += ']';
      break;
    }
  }
}

std::string Json::dump() const {
  std::string out;
  write(out);
  return out;
}

}  // namespace nehari
