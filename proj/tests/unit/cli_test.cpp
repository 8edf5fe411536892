#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "qsd/oracle.hpp"

namespace qsd::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

TEST(Cli, CheckWitt) {
  const Result r = run_cli({"check", "23", "7", "21", "3", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(has(r.out, "r=77")) << r.out;
  EXPECT_TRUE(has(r.out, "b=253")) << r.out;
  EXPECT_TRUE(has(r.out, "(253,140,87,65)")) << r.out;
  EXPECT_TRUE(has(r.out, "140^1 25^22 (-3)^230")) << r.out;
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run_cli({"check", "23", "7", "21", "4", "1"}).code, kCriterionFailure);
  EXPECT_EQ(run_cli({"check", "23", "7", "21", "3"}).code, kUsage);
  EXPECT_EQ(run_cli({"check", "23", "7", "21", "3", "3"}).code, kUsage);
  EXPECT_EQ(run_cli({"check", "a", "7", "21", "3", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
  // externally excluded only
  EXPECT_EQ(run_cli({"check", "5292", "378", "29", "27", "0"}).code, kOk);
}

TEST(Cli, CheckJsonUsesRationalStrings) {
  const Result r = run_cli({"--format", "json", "check", "23", "7", "21", "4", "1"});
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "infeasible");
  EXPECT_EQ(j["block_graph"]["R"], "50/3");
  EXPECT_EQ(j["derived"]["b"], "253");
}

TEST(Cli, CheckCsv) {
  const Result r = run_cli({"--format", "csv", "check", "23", "7", "21", "3", "1"});
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, csv_header());
  EXPECT_EQ(row.rfind("23,7,21,3,1,77,253,253,140,25,-3,87,65,60,35,0,0,0,0,0,feasible,", 0), 0u) << row;
}

TEST(Cli, ScanSurvivors) {
  const Result r = run_cli({"scan", "--v-max", "8", "--survivors"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(has(r.out, "(8,2,1,1,0)")) << r.out;
  EXPECT_TRUE(has(r.out, "(8,4,3,2,0)")) << r.out;
  const Result e = run_cli({"scan", "--v-max", "3"});
  EXPECT_EQ(e.code, kOk);
  std::istringstream lines(e.out);
  for (std::string line; std::getline(lines, line);) EXPECT_EQ(line.rfind('#', 0), 0u) << line;
}

TEST(Cli, ScanCapAndBadFilter) {
  EXPECT_EQ(run_cli({"scan", "--v-max", "60", "--all"}).code, kResourceCap);
  EXPECT_EQ(run_cli({"scan", "--v-max", "8", "--filters", "CC,bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"scan", "--v-max", "8", "--all", "--survivors"}).code, kUsage);
}

TEST(Cli, ScanJsonDeterministicAndRoundTrips) {
  const Result a = run_cli({"--format", "json", "scan", "--v-max", "8"});
  const Result b = run_cli({"--format", "json", "--threads", "8", "scan", "--v-max", "8"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(dump(Json::parse(a.out)), a.out);
}

TEST(Cli, JsonRoundTripAllCommands) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "check", "23", "7", "21", "3", "1"},
           {"--format", "json", "tables"},
           {"--format", "json", "family", "bh"},
           {"--format", "json", "family", "ard"},
           {"--format", "json", "complement", "23", "7", "21", "3", "1"},
           {"--format", "json", "equivalence", "--samples", "20"},
           {"--format", "json", "oracle", "--design", "632"}}) {
    const Result r = run_cli(args);
    EXPECT_EQ(r.code, kOk) << args[2] << r.err;
    EXPECT_EQ(dump(Json::parse(r.out)), r.out) << args[2];
  }
}

TEST(Cli, Tables) {
  const Result r = run_cli({"tables"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(has(r.out, "14 rows, 0 arithmetic failures")) << r.out;
  EXPECT_TRUE(has(r.out, "Shrikhande53")) << r.out;
  EXPECT_TRUE(has(r.out, "133")) << r.out;
  const Json j = Json::parse(run_cli({"--format", "json", "tables"}).out);
  EXPECT_EQ(j["rows"].size(), 14u);
}

TEST(Cli, FamilyBh) {
  const Result r = run_cli({"family", "bh", "--q", "4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(has(r.out, "(64,24,46,12,8)")) << r.out;
  EXPECT_TRUE(has(r.out, "126")) << r.out;
  EXPECT_TRUE(has(r.out, "336")) << r.out;
  EXPECT_TRUE(has(r.out, "feasible")) << r.out;
  EXPECT_EQ(run_cli({"family", "bh", "--q", "6"}).code, kUsage);
}

TEST(Cli, FamilyArd) {
  const Result r = run_cli({"family", "ard", "--n", "14", "--t", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(has(r.out, "(5292,378,29,27,0)")) << r.out;
}

TEST(Cli, Complement) {
  const Result r = run_cli({"complement", "23", "7", "21", "3", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(has(r.out, "(23,16,120,12,10)")) << r.out;
  EXPECT_EQ(run_cli({"complement", "10", "6", "5", "4", "1"}).code, kCriterionFailure);
}

TEST(Cli, Equivalence) {
  const Result r = run_cli({"equivalence", "--seed", "42", "--samples", "200"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(has(r.out, "0 failures")) << r.out;
}

TEST(Cli, OracleExport) {
  const auto dir = std::filesystem::temp_directory_path() / "qsd_cli_export_test";
  std::filesystem::remove_all(dir);
  const Result r = run_cli({"oracle", "--design", "pair8", "--export", dir.string()});
  EXPECT_EQ(r.code, kOk) << r.err;
  bool found = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    const ExplicitDesign d = parse_design(in);
    EXPECT_EQ(d.to_text(), build_pair_design(8).to_text());
    found = true;
  }
  EXPECT_TRUE(found);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qsd::cli
