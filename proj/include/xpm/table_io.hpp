#pragma once

// Table serialization.  CSV with 17-significant-digit numbers and LF line
// endings, so emit -> parse -> emit is byte-identical; JSON as an array of
// flat records with the same number formatting.

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xpm/sweep.hpp"

namespace xpm {

namespace detail {

inline std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& tok, int lineno) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::runtime_error("csv line " + std::to_string(lineno) +
                             ": cannot parse number '" + tok + "'");
  return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string tok;
  std::stringstream ss(line);
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline void write_csv(const SweepTable& table, std::ostream& out) {
  table.validate();
  out << table.axis;
  for (const auto& col : table.columns) out << ',' << col;
  out << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << detail::format_double(table.axis_values[i]);
    for (double v : table.rows[i]) out << ',' << detail::format_double(v);
    out << '\n';
  }
}

inline SweepTable read_csv(std::istream& in) {
  SweepTable table;
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line))
    throw std::runtime_error("csv: empty input");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = detail::split_csv_line(line);
  if (header.empty()) throw std::runtime_error("csv: empty header");
  table.axis = header.front();
  table.columns.assign(header.begin() + 1, header.end());

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> toks = detail::split_csv_line(line);
    if (toks.size() != header.size())
      throw std::runtime_error("csv line " + std::to_string(lineno) + ": expected " +
                               std::to_string(header.size()) + " fields, got " +
                               std::to_string(toks.size()));
    table.axis_values.push_back(detail::parse_double(toks[0], lineno));
    std::vector<double> row;
    row.reserve(toks.size() - 1);
    for (std::size_t j = 1; j < toks.size(); ++j)
      row.push_back(detail::parse_double(toks[j], lineno));
    table.rows.push_back(std::move(row));
  }
  table.validate();
  return table;
}

// Array of flat {axis: value, column: value, ...} records.  NaN (absent
// branch markers) serializes as null per JSON rules.
inline void write_json(const SweepTable& table, std::ostream& out) {
  table.validate();
  auto number = [](double v) {
    return v == v ? detail::format_double(v) : std::string("null");
  };
  out << "[\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << "  {\"" << detail::json_escape(table.axis)
        << "\": " << number(table.axis_values[i]);
    for (std::size_t j = 0; j < table.columns.size(); ++j)
      out << ", \"" << detail::json_escape(table.columns[j])
          << "\": " << number(table.rows[i][j]);
    out << (i + 1 < table.rows.size() ? "},\n" : "}\n");
  }
  out << "]\n";
}

}  // namespace xpm
