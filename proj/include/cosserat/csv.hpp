#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cosserat/errors.hpp"

namespace cosserat {

/// Round-trip-exact formatting for doubles (17 significant digits, '.'
/// decimal separator regardless of locale).
inline std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw ConfigError("csv: cannot open '" + path + "' for writing");
  }

  template <typename... Ts>
  void row(const Ts&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << "\n";
  }

 private:
  static std::string cell(double v) { return formatDouble(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  static std::string cell(const char* v) { return v; }
  static std::string cell(const std::string& v) { return v; }

  std::ofstream out_;
};

}  // namespace cosserat
