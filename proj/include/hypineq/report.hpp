#pragma once

// Report envelopes, their CSV/JSON serialization and golden-file comparison.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace hypineq::report {

inline constexpr int kSchemaVersion = 1;

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Envelope {
  int schema_version = kSchemaVersion;
  std::string command;
  // Echo of the parsed configuration, including the seed.
  std::map<std::string, Cell> params;
  Table table;
  std::map<std::string, Cell> summary;
  std::vector<std::string> diagnostics;
};

enum class Format { Csv, Json };

// Shortest round-trip decimal; integral values keep a trailing ".0"; +-inf as "+inf"/"-inf".
std::string format_double(double x);

// Sorted keys, no NaN (SchemaError), infinities as "+inf"/"-inf".
std::string to_json(const Envelope& env);
Envelope from_json(const std::string& text);
// Header row plus one line per table row (RFC 4180 quoting).
std::string to_csv(const Envelope& env);

// Throws std::invalid_argument on an empty table.
void emit(const Envelope& env, Format format, std::ostream& out);
// Throws std::runtime_error naming `path` on I/O failure.
void emit_to_file(const Envelope& env, Format format, const std::string& path);

struct GoldenDiff {
  std::vector<std::string> entries;
  bool ok() const { return entries.empty(); }
};

// Per-field comparison: numbers within rel_tol relative, everything else equal.
// Throws SchemaError when versions, columns or key sets differ.
GoldenDiff compare_envelopes(const Envelope& golden, const Envelope& current, double rel_tol);
GoldenDiff compare_golden(const std::string& path, const Envelope& current, double rel_tol);

}  // namespace hypineq::report
