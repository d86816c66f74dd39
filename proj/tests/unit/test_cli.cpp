#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "pierce/cli.hpp"

using namespace pierce::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> argv) {
  std::ostringstream out, err;
  int code = run(argv, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::size_t count_fields(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

}  // namespace

TEST_CASE("parse") {
  Command a = parse({"leap", "--rule", "gregorian", "--year", "2028"});
  CHECK(a.name == "leap");
  CHECK(a.rule == "gregorian");
  CHECK(a.year == "2028");

  Command b = parse({"count", "--rule", "4,25,4", "--through", "400", "--method", "both"});
  CHECK(b.name == "count");
  CHECK(b.method == "both");
  CHECK(b.through == "400");

  CHECK_THROWS_AS(parse({"leap", "--year", "2028"}), UsageError);
  CHECK_THROWS_AS(parse({"leap", "--rule", "gregorian", "--year", "2028", "--bogus"}), UsageError);
  CHECK_THROWS_AS(parse({"nonsense"}), UsageError);
  CHECK_THROWS_AS(parse({"count", "--rule", "4", "--through", "10", "--method", "sideways"}), UsageError);
  CHECK_THROWS_AS(parse({"series", "--rule", "4", "--output", "xml"}), UsageError);

  Command c = parse({"lln-sample", "--count", "5", "--n", "3", "--seed", "9", "--output", "csv"});
  CHECK(c.seed == 9);
  CHECK(c.output == OutputFormat::csv);
}

TEST_CASE("execute examples") {
  auto r = invoke({"leap", "gregorian", "2100"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");

  r = invoke({"count", "--rule", "4,25,4", "--through", "400", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "97 97\n");

  r = invoke({"series", "--rule", "gregorian"});
  CHECK(r.code == 0);
  CHECK(r.out == "97/400 (0.2425)\n");

  r = invoke({"expand", "97/400"});
  CHECK(r.out == "4,33,100\n");

  r = invoke({"interval", "1,4", "--output", "json"});
  CHECK(r.out == R"({"generator":"1,4","left":"3/4","right":"4/5","leftOpen":false,"rightOpen":true})"
                 "\n");

  r = invoke({"construct", "--alpha", "1", "--n", "3"});
  CHECK(r.out == "3,8,21,...\n");

  r = invoke({"zc", "--c", "1", "--depth", "3", "--output", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["prefixes"].size() == 4);
}

TEST_CASE("exit codes and structured errors") {
  auto r = invoke({"expand", "3/2"});
  CHECK(r.code == 1);
  auto e = nlohmann::json::parse(r.err);
  CHECK(e["error"] == "OutOfDomain");
  CHECK(e.contains("message"));

  r = invoke({"interval", "3,2"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err)["error"] == "NotMonotone");

  r = invoke({"leap", "--year", "2028"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());

  r = invoke({});
  CHECK(r.code == 2);

  r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("trajectory") != std::string::npos);
}

TEST_CASE("csv outputs follow their schemas") {
  auto r = invoke({"trajectory", "--alpha", "1", "--rmax", "3", "--output", "csv"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "branch,r,N,L,drift_lo,drift_hi,quotient_lo,quotient_hi,thm2");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(count_fields(lines[i]) == 9);
    CHECK(lines[i][0] == (i <= 3 ? 'N' : 'M'));
  }
  CHECK(lines[1].rfind("N,1,482,140,", 0) == 0);

  r = invoke({"drift", "--rule", "4,25,4", "--x", "97/400", "--through", "5", "--output", "csv"});
  lines = split_lines(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "N,L,drift_lo,drift_hi");
  CHECK(lines[4] == "4,1,-3/100,-3/100");

  r = invoke({"lln-sample", "--count", "4", "--bits", "32", "--n", "3", "--seed", "1", "--output", "csv"});
  lines = split_lines(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "sample,x,rate_lo,rate_hi");
}

TEST_CASE("identical argv gives identical bytes") {
  std::vector<std::string> argv{"lln-sample", "--count", "30", "--bits", "64", "--n", "5", "--seed", "123"};
  CHECK(invoke(argv).out == invoke(argv).out);
  std::vector<std::string> traj{"trajectory", "--alpha", "4", "--rmax", "2", "--output", "json"};
  CHECK(invoke(traj).out == invoke(traj).out);
}
