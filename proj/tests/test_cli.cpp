#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "linset/cli.hpp"

using namespace linset;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "linset");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("classify reports") {
  const auto a = run({"classify", "--p", "2", "--e", "1", "--n", "3", "--f", "0,1,0"});
  REQUIRE(a.code == 0);
  const auto j = a.json();
  CHECK(j["body"]["zgl_class"] == 2);
  CHECK(j["body"]["gl_class"] == 1);
  CHECK(j["header"]["field"]["modulus"] == Json{1, 1, 0, 1});
  CHECK(j["header"]["command"] == "linset classify --p 2 --e 1 --n 3 --f 0,1,0");

  const auto t = run({"classify", "--n", "3", "--f", "trace"}).json();
  CHECK(t["body"]["zgl_class"] == 1);
  CHECK(t["body"]["simple"] == true);
}

TEST_CASE("same request, same bytes; threads do not matter") {
  const std::vector<std::string> args{"classify", "--p", "3", "--n", "3", "--f", "pseudoregulus:1"};
  CHECK(run(args).out == run(args).out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "2"});
  CHECK(run(args).json()["body"] == run(threaded).json()["body"]);
}

TEST_CASE("nonsimple scan includes every generator") {
  const auto r = run({"nonsimple-scan", "--p", "5", "--e", "1", "--n", "5"});
  REQUIRE(r.code == 0);
  const auto b = r.json()["body"];
  CHECK(b["generators"] == 1400);
  CHECK(b["generators_failing"].empty());
  CHECK(b["generator_claim_applies"] == true);
  CHECK(b["passing_count"].get<std::uint64_t>() >= 1400);
}

TEST_CASE("rank distribution as CSV") {
  const auto r = run({"mrd", "--n", "3", "--f", "0,1,0", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "r,count\n0,1\n1,0\n2,49\n3,14\n");
  const auto j = run({"mrd", "--n", "3", "--f", "trace"}).json()["body"];
  CHECK(j["mrd"] == false);
  CHECK(j["A"] == Json{1, 7, 28, 28});
  CHECK(run({"classify", "--n", "3", "--f", "trace", "--format", "csv"}).code == kExitError);
}

TEST_CASE("families by name") {
  const auto j = run({"mrd", "--p", "3", "--n", "3", "--family", "ltz", "--s", "1", "--delta", "g^1"}).json()["body"];
  CHECK(j["mrd"] == true);
  CHECK(j["scattered"] == true);
  CHECK(run({"profile", "--p", "3", "--n", "4", "--f", "sheekey:g^1"}).code == 0);
  CHECK(run({"profile", "--p", "3", "--n", "4", "--f", "ltz:1,g^1"}).code == 0);
  CHECK(run({"profile", "--p", "3", "--n", "4", "--f", "ltz:2,g^1"}).code == kExitError);
}

TEST_CASE("budget refusal and parse errors") {
  const auto r = run({"classify", "--p", "3", "--n", "5", "--f", "trace", "--budget", "1000"});
  CHECK(r.code == kExitBudget);
  CHECK(r.err.find("BudgetExceeded") != std::string::npos);
  CHECK(run({"classify", "--n", "3", "--f", "0,1"}).code == kExitError);
  CHECK(run({"classify", "--n", "3", "--f", "bogus:1"}).code == kExitError);
  CHECK(run({"classify", "--p", "4", "--n", "3", "--f", "trace"}).code == kExitError);
  CHECK(run({"nosuchverb"}).code == kExitError);
  CHECK(run({"classify", "--n", "3", "--f", "trace", "--budget", "0"}).code == kExitError);
}

TEST_CASE("falsified reports exit with 3") {
  Report r;
  CHECK(exit_code(r) == kExitOk);
  r.falsified = true;
  CHECK(exit_code(r) == kExitFalsified);
  CHECK(exit_code(r, kExitError) == kExitFalsified);
  CHECK(emit(r, "json").find("\"falsified\": true") != std::string::npos);
}

TEST_CASE("other verbs") {
  const auto e = run({"equiv", "--n", "4", "--f", "0,1,0,0", "--g", "0,0,0,1"}).json()["body"];
  CHECK(e["equivalent"] == true);
  CHECK(e["same_point_set"] == true);
  const auto b = run({"blocking", "--n", "3", "--f", "trace"}).json()["body"];
  CHECK(b["size"] == 13);
  CHECK(b["is_blocking"] == true);
  CHECK(b["redei_lines"].size() == 3);
  const auto p = run({"project", "--n", "3", "--f", "trace"}).json()["body"];
  CHECK(p["size"] == 5);
  CHECK(p["reproduces_graph"] == true);
  const auto t = run({"transversal", "--n", "3", "--f", "0,1,0", "--full"}).json()["body"];
  CHECK(t["transversal_classes"] == 2);
  CHECK(t["zgl_class"] == 2);
  const auto u = run({"profile", "--n", "3", "--u", "1,0;2,0;4,0"}).json()["body"];
  CHECK(u["size"] == 1);
  CHECK(u["maxfield_d"] == 3);
  CHECK(run({"transversal", "--n", "3", "--u", "0,1;1,0;2,0"}).code == kExitError);
}

TEST_CASE("report to a file") {
  const std::string path = "linset_cli_test_report.json";
  const auto r = run({"profile", "--n", "3", "--f", "trace", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str())["body"]["size"] == 5);
  std::remove(path.c_str());
  CHECK(run({"profile", "--n", "3", "--f", "trace", "--out", "/nonexistent/dir/x.json"}).code == kExitError);
}

TEST_CASE("argument parsers") {
  const auto F = FieldCtx::build(2, 1, 3);
  CHECK(parse_element(F, "5") == FElem{5});
  CHECK(parse_element(F, "g^1") == F.generator());
  CHECK_THROWS_AS(parse_element(F, "8"), Error);
  CHECK(parse_poly_arg(F, "trace") == trace_poly(F));
  CHECK(parse_poly_arg(F, "pseudoregulus:2") == qpoly_monomial(F, 2));
  CHECK(parse_poly_arg(F, "gabidulin") == qpoly_monomial(F, 1));
  CHECK_THROWS_AS(parse_poly_arg(F, "pseudoregulus:3"), Error);
  CHECK(parse_vectors(F, "1,2;3,4", 2).size() == 2);
  CHECK_THROWS_AS(parse_vectors(F, "1,2,3", 2), Error);
  CHECK(parse_modulus("1,1,0,1") == std::vector<std::uint32_t>{1, 1, 0, 1});
  const auto r = run({"profile", "--n", "3", "--modulus", "1,0,1,1", "--f", "trace"}).json();
  CHECK(r["header"]["field"]["modulus"] == Json{1, 0, 1, 1});
}
