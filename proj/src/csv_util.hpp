#pragma once

// Internal comma-separated text helpers. The schemas in play never need
// quoting, so a plain split is enough.

#include <cstdio>
#include <istream>
#include <string>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline bool parse_int(const std::string& text, int& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  try {
    long v = std::stol(text, &pos);
    if (pos != text.size()) return false;
    out = static_cast<int>(v);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

inline bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stod(text, &pos);
    return pos == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

// Fixed-point formatting with locale-independent decimal dot.
inline std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

// Line-by-line reader that validates the header row and strips CR endings.
class CsvReader {
 public:
  CsvReader(std::istream& in, const std::vector<std::string>& header) : in_(in) {
    std::string line;
    if (!std::getline(in_, line)) {
      throw ParseError(1, "missing header");
    }
    strip_cr(line);
    if (split_fields(line) != header) {
      throw ParseError(1, "unexpected header '" + line + "'");
    }
    line_ = 1;
    columns_ = header.size();
  }

  // Fills `fields` with the next data record; false at end of stream.
  // Skips blank lines. Throws ParseError on a wrong field count.
  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      strip_cr(line);
      if (line.empty()) continue;
      fields = split_fields(line);
      if (fields.size() != columns_) {
        throw ParseError(line_, "expected " + std::to_string(columns_) + " fields, got " +
                                    std::to_string(fields.size()));
      }
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  static void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }

  std::istream& in_;
  std::size_t line_ = 0;
  std::size_t columns_ = 0;
};

}  // namespace fock
