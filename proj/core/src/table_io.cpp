#include "ellipuc/table_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return csv_escape(v);
        }
      },
      c);
}

// Non-finite values become strings since JSON has no literal for them.
ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_double(v);
          return v;
        } else {
          return v;
        }
      },
      c);
}

ordered_json number_json(double v) { return cell_json(Cell{v}); }

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw DomainError("table row has " + std::to_string(row.size()) +
                      " cells, expected " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t, const std::string& kind) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = kind;
  j["columns"] = t.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

void Report::add(std::string name, double residual, double tolerance,
                 std::string note) {
  // NaN never passes.
  const bool ok = residual <= tolerance;
  checks.push_back({std::move(name), residual, tolerance, ok, std::move(note)});
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<std::string> Report::failed_names() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = r.command;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = std::move(cfg);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["residual"] = number_json(c.residual);
    e["tolerance"] = number_json(c.tolerance);
    e["passed"] = c.passed;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["passed"] = r.passed();
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& r) {
  Table t;
  t.columns = {"name", "residual", "tolerance", "passed"};
  for (const auto& c : r.checks) {
    t.add_row({c.name, c.residual, c.tolerance,
               std::string(c.passed ? "true" : "false")});
  }
  return to_csv(t);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace ellipuc
