#pragma once

// Deterministic CSV / JSON rendering of small numeric tables and residual
// reports. Doubles use the shortest round-trip decimal form, so identical
// inputs give byte-identical files.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ellipuc {

// Empty monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string format_double(double x);

std::string to_csv(const Table& t);
// {"schema": 1, "kind": kind, "columns": [...], "rows": [[...], ...]}
std::string to_json(const Table& t, const std::string& kind);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  // in display order
  std::vector<CheckResult> checks;

  void add(std::string name, double residual, double tolerance,
           std::string note = {});
  bool passed() const;
  std::vector<std::string> failed_names() const;
};

// {"schema": 1, "command": ..., "config": {...}, "checks": [...], "passed": b}
std::string to_json(const Report& r);
std::string to_csv(const Report& r);

// "-" writes to stdout.
void write_text(const std::string& path, const std::string& text);

}  // namespace ellipuc
