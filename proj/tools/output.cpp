#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rqc::cli {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  return std::get<std::string>(c);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  os << "# ";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  // Numbers are emitted verbatim so the JSON carries the same 17 digits as CSV.
  os << "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      os << (i ? ", " : "") << nlohmann::json(t.columns[i]).dump() << ": ";
      const Cell& c = t.rows[r][i];
      if (const auto* d = std::get_if<double>(&c)) {
        os << (std::isfinite(*d) ? format_real(*d) : "null");
      } else {
        os << nlohmann::json(std::get<std::string>(c)).dump();
      }
    }
    os << "}";
  }
  os << (t.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const Table& t, Format f, std::ostream& os) {
  if (f == Format::Json) {
    write_json(t, os);
  } else {
    write_csv(t, os);
  }
}

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      t.columns = split(line.substr(2));
      continue;
    }
    std::vector<Cell> row;
    for (const auto& field : split(line)) {
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (!field.empty() && end == field.c_str() + field.size()) {
        row.emplace_back(v);
      } else {
        row.emplace_back(field);
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace rqc::cli
