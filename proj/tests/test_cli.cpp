#include <sstream>
#include <string>

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "commands.hpp"

using namespace zagreb;
namespace cli = zagreb::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run compute(const std::string& input, const std::string& format = "json") {
  std::istringstream in(input);
  std::ostringstream out, err;
  cli::ComputeOptions opt;
  opt.format = format;
  int code = cli::run_compute(opt, in, out, err);
  return {code, out.str(), err.str()};
}

Run construct(int n, int k, const std::string& index, const std::string& goal,
              const std::string& format = "graph6") {
  std::ostringstream out, err;
  int code = cli::run_construct({n, k, index, goal, format}, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute", "[cli]") {
  auto r = compute(emit_graph6(Tree::path(6)) + "\n");
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pi1"]["exact"] == "256");
  CHECK(j["pi2"]["exact"] == "256");
  CHECK(j["k"] == 4);
  CHECK(j["delta"] == 2);

  r = compute(emit_graph6(Tree::star(6)) + "\n");
  j = nlohmann::json::parse(r.out);
  CHECK(j["pi1"]["exact"] == "25");
  CHECK(j["pi2"]["exact"] == "3125");
  CHECK(j["m1"] == 30);
  CHECK(j["m2"] == 25);

  r = compute("Bg\nCs\nBw\n");
  CHECK(r.code == cli::kParseError);
  CHECK(r.err.find("line 3") != std::string::npos);

  r = compute("# two trees as edge lists\n0 1\n1 2\n\n0 1\n0 2\n0 3\n");
  REQUIRE(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(nlohmann::json::parse(first)["line"] == 2);
  CHECK(nlohmann::json::parse(second)["pi2"]["exact"] == "27");

  r = compute("0 1\n1 2\n1 x\n");
  CHECK(r.code == cli::kParseError);
  CHECK(r.err.find("line 3") != std::string::npos);

  r = compute("0 1\n0 1\n");
  CHECK(r.code == cli::kParseError);
  CHECK(r.err.find("duplicate") != std::string::npos);

  r = compute("EhCG\n", "table");
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("256") != std::string::npos);
}

TEST_CASE("construct", "[cli]") {
  auto r = construct(11, 2, "pi1", "min");
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("# sequence (5,5,2,1,1,1,1,1,1,1,1)") != std::string::npos);
  CHECK(r.out.find("# bound 2500") != std::string::npos);

  // The witness fed back through compute reproduces the bound.
  auto back = compute(r.out);
  REQUIRE(back.code == cli::kOk);
  CHECK(nlohmann::json::parse(back.out)["pi1"]["exact"] == "2500");

  r = construct(9, 7, "pi2", "min", "json");
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound"]["exact"] == "16384");
  CHECK(j["graph6"] == emit_graph6(realize(degree_sequence_of(Tree::path(9)))));

  r = construct(12, 3, "pi2", "max", "edgelist");
  REQUIRE(r.code == cli::kOk);
  back = compute(r.out);
  CHECK(nlohmann::json::parse(back.out)["pi2"]["exact"] ==
        extremal_spec(12, 3, Index::pi2, Goal::max).bound.to_string());

  r = construct(8, 4, "pi1", "min");
  CHECK(r.code == cli::kDomainError);
  CHECK(r.err.find("k = n-2") != std::string::npos);
  CHECK(construct(11, 2, "pi3", "min").code == cli::kDomainError);
  CHECK(construct(11, 2, "pi1", "min", "xml").code == cli::kDomainError);
}

TEST_CASE("verify", "[cli]") {
  std::ostringstream out, err;
  CHECK(cli::run_verify({4, "", 1}, out, err) == cli::kOk);
  CHECK(out.str().find("n=4 k=1") < out.str().find("n=4 k=2"));
  CHECK(out.str().find("2 classes, 0 mismatches") != std::string::npos);

  std::ostringstream o2, e2;
  CHECK(cli::run_verify({3, "", 1}, o2, e2) == cli::kDomainError);
  CHECK(cli::run_verify({kMaxEnumerationOrder + 1, "", 1}, o2, e2) == cli::kDomainError);
}

TEST_CASE("table", "[cli]") {
  std::ostringstream out, err;
  REQUIRE(cli::run_table({10, 12, "csv"}, out, err) == cli::kOk);
  const std::string csv = out.str();
  CHECK(csv.starts_with("n,k,delta,pi1_min,pi1_max,pi2_min,pi2_max\n"));
  CHECK(csv.find("\n11,2,5,2500,82944,746496,39062500\n") != std::string::npos);
  CHECK(csv.find("\n10,8,2,65536,65536,65536,65536\n") != std::string::npos);

  std::ostringstream text, e2;
  REQUIRE(cli::run_table({10, 12, "text"}, text, e2) == cli::kOk);
  CHECK(text.str().find("39062500") != std::string::npos);
  CHECK(text.str().find("log2_pi1_min") != std::string::npos);

  std::ostringstream o3, e3;
  CHECK(cli::run_table({10, 9, "csv"}, o3, e3) == cli::kDomainError);
  CHECK(cli::run_table({10, 12, "xml"}, o3, e3) == cli::kDomainError);
}
