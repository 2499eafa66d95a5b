#include "json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace vml::cli {

namespace {

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(2 * depth), ' '); }

void write(std::string& out, const nlohmann::json& j, int depth) {
  using T = nlohmann::json::value_t;
  switch (j.type()) {
    case T::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // The default object type is a std::map, so iteration is sorted.
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        indent(out, depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        write(out, it.value(), depth + 1);
      }
      out += '\n';
      indent(out, depth);
      out += '}';
      return;
    }
    case T::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        indent(out, depth + 1);
        write(out, j[i], depth + 1);
      }
      out += '\n';
      indent(out, depth);
      out += ']';
      return;
    }
    case T::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  write(out, j, 0);
  out += '\n';
  return out;
}

}  // namespace vml::cli
