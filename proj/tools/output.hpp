#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace rqc::cli {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// Shortest text of 17 significant digits; parses back to the same double.
std::string format_real(double v);

/// CSV: one '#'-prefixed header line naming the columns, then one line per row.
void write_csv(const Table& t, std::ostream& os);
/// JSON: array of row objects. Non-finite numbers become null.
void write_json(const Table& t, std::ostream& os);
void write_table(const Table& t, Format f, std::ostream& os);

/// Reads a CSV written by write_csv back into a table; numeric-looking cells
/// come back as doubles.
Table read_csv(std::istream& is);

}  // namespace rqc::cli
