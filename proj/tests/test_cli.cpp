#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quillen/cli.hpp"
#include "quillen/driver.hpp"
#include "support.hpp"

using namespace quillen;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "quillen");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QUILLEN_TEST_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

// Every polynomial string in a JSON value re-parses to itself.
void expect_canonical(const json& value, const RingPtr& ring) {
  if (value.is_array()) {
    for (const auto& v : value) expect_canonical(v, ring);
  } else if (value.is_string()) {
    const std::string s = value.get<std::string>();
    EXPECT_EQ(to_string(parse_poly(s, ring)), s);
  }
}

}  // namespace

TEST(Cli, QsWorkedRow) {
  const Outcome o = run_cli({"qs", "--in", data("worked_row.json")});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const json doc = o.doc();
  EXPECT_EQ(doc["command"], "qs");
  EXPECT_EQ(doc["ring"], "ZZ[x,y]");
  EXPECT_EQ(doc["certificate"]["det"], "-1");
  EXPECT_EQ(doc["certificate"]["product"], json::parse(R"([["1","0","0"]])"));
  EXPECT_EQ(doc["stats"]["rounds"], 1);
  EXPECT_FALSE(doc["stats"].contains("elapsed_seconds"));
  const RingPtr R = make_ring(CoeffKind::Z, {"x", "y"});
  expect_canonical(doc["result"]["V"], R);
  // The emitted V solves the row when parsed back.
  std::vector<std::vector<std::string>> rows = doc["result"]["V"];
  const PolyMatrix V = quillen::testing::parse_matrix(rows, R);
  const auto f = quillen::testing::parse_row({"x^2", "2*y + 1", "x^5*y^2 + y"}, R);
  EXPECT_EQ(quillen::testing::strings(row_times(f, V)), (std::vector<std::string>{"1", "0", "0"}));
}

TEST(Cli, Deterministic) {
  for (const char* cmd : {"qs", "complete", "free-basis", "iso", "patch", "change-var"}) {
    const std::string file = std::string(cmd) == "patch" || std::string(cmd) == "change-var"
                                 ? data("worked_horrocks.json")
                                 : data("worked_row.json");
    const Outcome a = run_cli({cmd, "--in", file});
    const Outcome b = run_cli({cmd, "--in", file});
    ASSERT_EQ(a.code, cli::kOk) << cmd << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
  EXPECT_EQ(run_cli({"qs", "--seed", "5"}).out, run_cli({"qs", "--seed", "5"}).out);
}

TEST(Cli, TimingIsOptIn) {
  const Outcome o = run_cli({"qs", "--in", data("worked_row.json"), "--timing"});
  ASSERT_EQ(o.code, cli::kOk);
  EXPECT_TRUE(o.doc()["stats"].contains("elapsed_seconds"));
}

TEST(Cli, MaxIdeal) {
  const Outcome a = run_cli({"max-ideal", "--in", data("z_x_zero_ideal.json")});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.doc()["result"]["generators"], json({"2", "x"}));
  const Outcome b = run_cli({"max-ideal", "--in", data("z_x_2x1.json")});
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  EXPECT_EQ(b.doc()["result"]["generators"], json({"3", "x - 1"}));
  EXPECT_EQ(b.doc()["certificate"]["input_residues"], json({"0"}));
}

TEST(Cli, HorrocksAndPatch) {
  const Outcome h = run_cli({"horrocks", "--in", data("worked_horrocks.json")});
  ASSERT_EQ(h.code, cli::kOk) << h.err;
  EXPECT_EQ(h.doc()["result"]["denominator"], "2*x + 1");
  EXPECT_EQ(h.doc()["result"]["L"][1][0], "1/(2*x + 1)");
  const Outcome p = run_cli({"patch", "--in", data("worked_horrocks.json")});
  ASSERT_EQ(p.code, cli::kOk) << p.err;
  EXPECT_EQ(p.doc()["certificate"]["f_times_U"], json::parse(R"(["0","2*x + 1","x"])"));
  EXPECT_EQ(p.doc()["stats"]["exponent"], 1);
}

TEST(Cli, OtherCommands) {
  const Outcome u = run_cli({"is-unimodular", "--in", data("worked_row.json")});
  ASSERT_EQ(u.code, cli::kOk);
  EXPECT_EQ(u.doc()["result"]["unimodular"], true);
  const std::string snf = write_temp("quillen_snf.json", R"({"ring":{"coeff":"ZZ","vars":[]},"matrix":[["4","0"],["0","6"]]})");
  const Outcome s = run_cli({"snf", "--in", snf});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  EXPECT_EQ(s.doc()["result"]["D"], json::parse(R"([["2","0"],["0","12"]])"));
  const std::string gb = write_temp("quillen_gb.json", R"({"ring":{"coeff":"QQ","vars":["x","y"]},"ideal":["x*y - 1","y^2"]})");
  const Outcome g = run_cli({"gb", "--in", gb});
  ASSERT_EQ(g.code, cli::kOk) << g.err;
  EXPECT_EQ(g.doc()["result"]["contains_one"], true);
  const std::string proj =
      write_temp("quillen_proj.json", R"({"ring":{"coeff":"ZZ","vars":["x","y"]},"matrix":[["x^2"],["2*y + 1"],["x^5*y^2 + y"]]})");
  const Outcome pr = run_cli({"is-projective", "--in", proj});
  ASSERT_EQ(pr.code, cli::kOk) << pr.err;
  EXPECT_EQ(pr.doc()["result"]["rank"], 2);
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "quillen_out.json").string();
  const Outcome o = run_cli({"qs", "--in", data("worked_row.json"), "--out", path});
  ASSERT_EQ(o.code, cli::kOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream file(path);
  EXPECT_EQ(json::parse(file)["certificate"]["det"], "-1");
}

TEST(Cli, ExitCodes) {
  const Outcome zero = run_cli({"qs", "--in", data("zero_row.json")});
  EXPECT_EQ(zero.code, cli::kContractFailure);
  EXPECT_EQ(zero.doc()["error"], "NotUnimodular");

  const std::string bad = write_temp("quillen_bad.json", "{\"ring\": ");
  EXPECT_EQ(run_cli({"qs", "--in", bad}).code, cli::kParseError);
  const std::string bad_poly =
      write_temp("quillen_bad_poly.json", R"({"ring":{"coeff":"ZZ","vars":["x"]},"matrix":[["1/2*x"]]})");
  EXPECT_EQ(run_cli({"qs", "--in", bad_poly}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"qs", "--in", data("missing.json")}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"no-such-command"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"qs"}).code, cli::kParseError);

  const std::string hard = write_temp("quillen_hard.json", R"({"ring":{"coeff":"QQ","vars":["x"]},"ideal":["x^2 + 1"]})");
  EXPECT_EQ(run_cli({"max-ideal", "--in", hard}).code, cli::kBudgetExhausted);
  const Outcome capped = run_cli({"max-ideal", "--in", data("z_x_2x1.json"), "--budget", "1"});
  EXPECT_EQ(capped.code, cli::kBudgetExhausted);
  EXPECT_EQ(capped.doc()["error"], "SearchExhausted");
}

TEST(Cli, Fixtures) {
  const Outcome o = run_cli({"--fixtures"});
  EXPECT_EQ(o.code, cli::kOk);
  EXPECT_NE(o.out.find("all fixtures passed"), std::string::npos);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}
