#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extremal {

/// Numeric table with `#` comment lines, written as CSV with 17 significant
/// digits so every value round-trips.
struct Table {
  std::string name;
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  /// Index of a column; throws std::out_of_range if absent.
  std::size_t column(const std::string& key) const;
};

/// printf "%.17g"; non-finite values print as nan / inf.
std::string format_double(double v);

void write_csv(std::ostream& out, const Table& table);

}  // namespace extremal
