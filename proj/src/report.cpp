#include "hypineq/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hypineq/errors.hpp"

namespace hypineq::report {

namespace {

using json = nlohmann::json;

json cell_to_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) throw SchemaError("report: NaN is not representable");
    if (std::isinf(*d)) return *d > 0 ? "+inf" : "-inf";
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return std::get<bool>(c);
}

Cell cell_from_json(const json& j) {
  switch (j.type()) {
    case json::value_t::number_float:
      return j.get<double>();
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return j.get<std::int64_t>();
    case json::value_t::boolean:
      return j.get<bool>();
    case json::value_t::string: {
      const std::string s = j.get<std::string>();
      if (s == "+inf") return std::numeric_limits<double>::infinity();
      if (s == "-inf") return -std::numeric_limits<double>::infinity();
      return s;
    }
    default:
      throw SchemaError("report: unsupported JSON value " + j.dump());
  }
}

json map_to_json(const std::map<std::string, Cell>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[k] = cell_to_json(v);
  return o;
}

std::map<std::string, Cell> map_from_json(const json& j, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string("report: '") + what + "' must be an object");
  std::map<std::string, Cell> m;
  for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = cell_from_json(it.value());
  return m;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("report: missing field '") + key + "'");
  return j.at(key);
}

std::string cell_to_csv(const Cell& c) {
  std::string s;
  if (const double* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) throw SchemaError("report: NaN is not representable");
    s = format_double(*d);
  } else if (const auto* i = std::get_if<std::int64_t>(&c)) {
    s = std::to_string(*i);
  } else if (const auto* str = std::get_if<std::string>(&c)) {
    s = *str;
  } else {
    s = std::get<bool>(c) ? "true" : "false";
  }
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  q += '"';
  return q;
}

bool as_number(const Cell& c, double& out) {
  if (const double* d = std::get_if<double>(&c)) {
    out = *d;
    return true;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) {
    out = static_cast<double>(*i);
    return true;
  }
  return false;
}

std::string show(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return "\"" + *s + "\"";
  return cell_to_csv(c);
}

void compare_cell(const std::string& where, const Cell& g, const Cell& c, double rel_tol,
                  GoldenDiff& diff) {
  double a, b;
  if (as_number(g, a) && as_number(c, b)) {
    if (a == b) return;
    const double scale = std::max(std::abs(a), std::abs(b));
    if (std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= rel_tol * scale) return;
    diff.entries.push_back(where + ": " + show(g) + " != " + show(c));
    return;
  }
  if (g != c) diff.entries.push_back(where + ": " + show(g) + " != " + show(c));
}

void compare_maps(const std::string& what, const std::map<std::string, Cell>& g,
                  const std::map<std::string, Cell>& c, double rel_tol, GoldenDiff& diff) {
  for (const auto& [k, v] : g) {
    const auto it = c.find(k);
    if (it == c.end()) throw SchemaError("golden: " + what + " field '" + k + "' missing");
    compare_cell(what + "." + k, v, it->second, rel_tol, diff);
  }
  for (const auto& [k, v] : c) {
    (void)v;
    if (!g.count(k)) throw SchemaError("golden: unexpected " + what + " field '" + k + "'");
  }
}

}  // namespace

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string to_json(const Envelope& env) {
  json j;
  j["schema_version"] = env.schema_version;
  j["command"] = env.command;
  j["params"] = map_to_json(env.params);
  j["summary"] = map_to_json(env.summary);
  j["diagnostics"] = env.diagnostics;
  json table;
  table["name"] = env.table.name;
  table["columns"] = env.table.columns;
  json rows = json::array();
  for (const auto& row : env.table.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(cell_to_json(c));
    rows.push_back(std::move(r));
  }
  table["rows"] = std::move(rows);
  j["table"] = std::move(table);
  return j.dump(2) + "\n";
}

Envelope from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("report: invalid JSON: ") + e.what());
  }
  Envelope env;
  const json& version = require(j, "schema_version");
  if (!version.is_number_integer()) throw SchemaError("report: schema_version must be an integer");
  env.schema_version = version.get<int>();
  env.command = require(j, "command").get<std::string>();
  env.params = map_from_json(require(j, "params"), "params");
  env.summary = map_from_json(require(j, "summary"), "summary");
  for (const auto& d : require(j, "diagnostics")) env.diagnostics.push_back(d.get<std::string>());
  const json& table = require(j, "table");
  env.table.name = require(table, "name").get<std::string>();
  for (const auto& c : require(table, "columns")) env.table.columns.push_back(c.get<std::string>());
  for (const auto& r : require(table, "rows")) {
    std::vector<Cell> row;
    for (const auto& c : r) row.push_back(cell_from_json(c));
    if (row.size() != env.table.columns.size()) {
      throw SchemaError("report: row width does not match the column count");
    }
    env.table.rows.push_back(std::move(row));
  }
  return env;
}

std::string to_csv(const Envelope& env) {
  std::string out;
  for (std::size_t i = 0; i < env.table.columns.size(); ++i) {
    if (i) out += ',';
    out += cell_to_csv(env.table.columns[i]);
  }
  out += "\r\n";
  for (const auto& row : env.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_to_csv(row[i]);
    }
    out += "\r\n";
  }
  return out;
}

void emit(const Envelope& env, Format format, std::ostream& out) {
  if (env.table.rows.empty()) throw std::invalid_argument("emit: empty payload");
  out << (format == Format::Json ? to_json(env) : to_csv(env));
}

void emit_to_file(const Envelope& env, Format format, const std::string& path) {
  const std::string text = format == Format::Json ? to_json(env) : to_csv(env);
  if (env.table.rows.empty()) throw std::invalid_argument("emit: empty payload");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

GoldenDiff compare_envelopes(const Envelope& golden, const Envelope& current, double rel_tol) {
  if (golden.schema_version != current.schema_version) {
    throw SchemaError("golden: schema_version " + std::to_string(golden.schema_version) +
                      " != " + std::to_string(current.schema_version));
  }
  if (golden.table.columns != current.table.columns) {
    throw SchemaError("golden: table columns differ");
  }
  GoldenDiff diff;
  if (golden.command != current.command) {
    diff.entries.push_back("command: " + golden.command + " != " + current.command);
  }
  compare_maps("params", golden.params, current.params, rel_tol, diff);
  compare_maps("summary", golden.summary, current.summary, rel_tol, diff);
  if (golden.table.rows.size() != current.table.rows.size()) {
    diff.entries.push_back("rows: " + std::to_string(golden.table.rows.size()) +
                           " != " + std::to_string(current.table.rows.size()));
    return diff;
  }
  for (std::size_t r = 0; r < golden.table.rows.size(); ++r) {
    for (std::size_t c = 0; c < golden.table.columns.size(); ++c) {
      compare_cell("row " + std::to_string(r) + "." + golden.table.columns[c],
                   golden.table.rows[r][c], current.table.rows[r][c], rel_tol, diff);
    }
  }
  return diff;
}

GoldenDiff compare_golden(const std::string& path, const Envelope& current, double rel_tol) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open golden file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return compare_envelopes(from_json(ss.str()), current, rel_tol);
}

}  // namespace hypineq::report
