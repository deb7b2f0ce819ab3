#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "hypineq/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hypineq");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = hypineq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("constants command") {
  const Run r = run({"constants", "--N", "13", "--p", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("LambdaP,81.0") != std::string::npos);
  const Run j = run({"constants", "--N", "13", "--p", "4", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("help lists the inequality kinds") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  for (const char* tag : {"PGAP", "PROP11", "THM23", "THM25", "COR27", "THM29", "THM32", "THM72", "HARDY1D"}) {
    CHECK((r.out + r.err).find(tag) != std::string::npos);
  }
}

TEST_CASE("usage and hypothesis errors exit 2") {
  CHECK(run({"verify", "--kind", "NOPE"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"constants", "--N", "1"}).code == 2);
  const Run h = run({"verify", "--kind", "THM25", "--N", "3", "--p", "3", "--trials", "1"});
  CHECK(h.code == 2);
  CHECK(h.out.find("error,predicate,message") != std::string::npos);
}

TEST_CASE("verify, rp and figure1 commands") {
  const Run v = run({"verify", "--kind", "pgap", "--N", "3", "--p", "2", "--trials", "5", "--seed", "7"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("trial,kind,N,p,l,test_function,lhs,rhs,slack,quad_error,pass\r\n", 0) == 0);
  CHECK(run({"verify", "--kind", "pgap", "--N", "3", "--p", "2", "--trials", "5", "--seed", "7"}).out == v.out);
  const Run rp = run({"rp", "--N", "13", "--p", "4"});
  CHECK(rp.code == 0);
  CHECK(rp.out.find("rp,1.16833149113152") != std::string::npos);
  const Run f = run({"figure1", "--N", "13", "--p", "4", "--points", "50"});
  CHECK(f.out.rfind("r,Hp,is_ge_one\r\n", 0) == 0);
}
