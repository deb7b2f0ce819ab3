#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hypineq/errors.hpp"
#include "hypineq/report.hpp"

using namespace hypineq;
using namespace hypineq::report;

namespace {

Envelope sample() {
  Envelope env;
  env.command = "constants";
  env.params = {{"N", std::int64_t{13}}, {"p", 4.0}, {"seed", std::int64_t{1}}};
  env.table.name = "constants";
  env.table.columns = {"quantity", "value", "check"};
  env.table.rows = {{std::string("LambdaP"), 81.0, true},
                    {std::string("C"), 0.07322330470336312, true},
                    {std::string("r, \"quoted\""), INFINITY, false}};
  env.summary = {{"pass", true}};
  env.diagnostics = {"note"};
  return env;
}

}  // namespace

TEST_CASE("double formatting") {
  CHECK(format_double(81.0) == "81.0");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.0) == "-2.0");
  CHECK(format_double(INFINITY) == "+inf");
  CHECK(format_double(-INFINITY) == "-inf");
  CHECK(format_double(1e300) == "1e+300");
}

TEST_CASE("json round trip is byte identical") {
  const Envelope env = sample();
  const std::string text = to_json(env);
  CHECK(to_json(from_json(text)) == text);
  CHECK(text.find("\"+inf\"") != std::string::npos);
  CHECK(compare_envelopes(env, from_json(text), 1e-12).ok());
}

TEST_CASE("csv quoting and line endings") {
  const std::string csv = to_csv(sample());
  CHECK(csv.rfind("quantity,value,check\r\n", 0) == 0);
  CHECK(csv.find("LambdaP,81.0,true\r\n") != std::string::npos);
  CHECK(csv.find("\"r, \"\"quoted\"\"\",+inf,false\r\n") != std::string::npos);
}

TEST_CASE("invalid payloads") {
  Envelope env = sample();
  env.table.rows.push_back({std::string("bad"), NAN, true});
  CHECK_THROWS_AS(to_json(env), SchemaError);
  Envelope empty = sample();
  empty.table.rows.clear();
  std::ostringstream out;
  CHECK_THROWS_AS(emit(empty, Format::Json, out), std::invalid_argument);
  CHECK_THROWS_AS(emit_to_file(sample(), Format::Csv, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST_CASE("golden comparison") {
  const Envelope golden = sample();
  Envelope current = sample();
  std::get<double>(current.table.rows[1][1]) *= 1.0 + 0.5e-9;
  CHECK(compare_envelopes(golden, current, 1e-9).ok());
  std::get<double>(current.table.rows[1][1]) = 0.07322330470336312 * (1.0 + 2e-9);
  const GoldenDiff diff = compare_envelopes(golden, current, 1e-9);
  CHECK(diff.entries.size() == 1);
  Envelope missing = sample();
  missing.table.columns.pop_back();
  for (auto& row : missing.table.rows) row.pop_back();
  CHECK_THROWS_AS(compare_envelopes(golden, missing, 1e-9), SchemaError);
  Envelope version = sample();
  version.schema_version = 2;
  CHECK_THROWS_AS(compare_envelopes(golden, version, 1e-9), SchemaError);
}
