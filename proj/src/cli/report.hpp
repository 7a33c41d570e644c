#pragma once

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace cauchy::cli {

enum class Format { Csv, Json };

using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// A command's output: ordered scalars and tables, written deterministically.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::pair<std::string, Cell>> scalars;
  std::vector<Table> tables;

  Table& table(const std::string& name, std::vector<std::string> columns);
  void write(std::ostream& os, Format format) const;
};

/// Shortest round-trip representation; -0 is printed as 0.
std::string format_double(double v);

}  // namespace cauchy::cli
