#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace hvec::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command_line(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseIntList, Forms) {
  EXPECT_EQ(parse_int_list("6"), (std::vector<long>{6}));
  EXPECT_EQ(parse_int_list("6..9"), (std::vector<long>{6, 7, 8, 9}));
  EXPECT_EQ(parse_int_list("6,8,10"), (std::vector<long>{6, 8, 10}));
  EXPECT_THROW(parse_int_list("9..6"), UsageError);
  EXPECT_THROW(parse_int_list("x"), UsageError);
  EXPECT_THROW(parse_int_list(""), UsageError);
}

TEST(ParseArgs, Defaults) {
  const RunConfig c = parse_args({"verify", "thm-r", "--d", "10"});
  EXPECT_EQ(c.command, Command::Verify);
  EXPECT_EQ(c.family, Family::ThmR);
  EXPECT_EQ(c.field, 32003u);
  EXPECT_EQ(c.seed, 1u);
  EXPECT_EQ(c.trials, 5u);
  EXPECT_EQ(c.parities.size(), 2u);
  const RunConfig s = parse_args({"sweep", "thm-e", "--e", "6"});
  EXPECT_EQ(s.chars, (std::vector<std::uint64_t>{0, 101, 1009, 32003}));
}

TEST(ParseArgs, Rejections) {
  EXPECT_THROW(parse_args({"construct", "thm-e", "--e", "5"}), UsageError);
  EXPECT_THROW(parse_args({"construct", "thm-r", "--d", "9"}), UsageError);
  EXPECT_THROW(parse_args({"construct", "thm-e", "--d", "10"}), UsageError);
  EXPECT_THROW(parse_args({"construct", "thm-r", "--e", "6"}), UsageError);
  EXPECT_THROW(parse_args({"verify", "thm-e", "--e", "6", "--field", "100"}),
               UsageError);
  EXPECT_THROW(parse_args({"verify", "thm-e", "--e", "6", "--trials", "0"}),
               UsageError);
  EXPECT_THROW(parse_args({"sweep", "thm-e", "--e", "6", "--chars", "0,4"}),
               UsageError);
  EXPECT_THROW(parse_args({"frobnicate"}), UsageError);
  EXPECT_THROW(parse_args({"--help"}), HelpRequested);
}

TEST(Check, PlainOutput) {
  const auto r = invoke({"check", "1,10,14,20,14,10,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("symmetric: yes"), std::string::npos);
  EXPECT_NE(r.out.find("si_sequence: no (first-half difference step 2->3"),
            std::string::npos);
  const auto si = invoke({"check", "1,3,3,1"});
  EXPECT_NE(si.out.find("si_sequence: yes"), std::string::npos);
}

TEST(Check, JsonAndCsv) {
  const auto j = invoke({"check", "1,10,14,20,14,10,1", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["format_version"], kFormatVersion);
  const auto c = invoke({"check", "1,10,14,20,14,10,1", "--format", "csv"});
  EXPECT_NE(c.out.find("si_sequence,false,2,"), std::string::npos);
}

TEST(Check, InvalidVector) {
  for (const char* bad : {"2,3", "1,,3", "1,-2", "1,a"}) {
    const auto r = invoke({"check", bad});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_EQ(r.err.rfind("hvec: error: ", 0), 0u) << r.err;
  }
}

TEST(Construct, CsvRows) {
  const auto r = invoke({"construct", "thm-r", "--d", "10", "--parity", "even",
                         "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "thm_r_even,10,level,1,3,6,10,15,21,28,36,45,55,66,67,68,56,42,30,"
            "20,12,6,2\n"
            "thm_r_even,10,gorenstein,1,5,12,22,35,51,70,92,113,122,132,122,113,"
            "92,70,51,35,22,12,5,1\n");
}

TEST(Construct, LiftAndNonexistence) {
  const auto r = invoke({"construct", "thm-e", "--e", "6", "--a", "2",
                         "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gorenstein,1,12,16,22,16,12,1"), std::string::npos);
  const auto low = invoke({"construct", "thm-e", "--e", "5"});
  EXPECT_EQ(low.code, 2);
  EXPECT_TRUE(low.out.empty());
}

TEST(Verify, MatchesAndIsDeterministic) {
  const std::vector<std::string> args{"verify", "thm-e", "--e", "6..7",
                                      "--trials", "2", "--format", "json"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  const auto doc = nlohmann::json::parse(first.out);
  ASSERT_EQ(doc["reports"].size(), 2u);
  for (const auto& report : doc["reports"]) {
    EXPECT_EQ(report["verdict"], "match");
    EXPECT_EQ(report["per_trial"].size(), 2u);
    EXPECT_FALSE(report.contains("degree_microseconds"));
  }
  // Round trip: the emitted text is exactly the canonical dump.
  EXPECT_EQ(doc.dump(2) + "\n", first.out);
}

TEST(Verify, SeedChangesTrialsNotVerdict) {
  const auto a = invoke({"verify", "thm-e", "--e", "6", "--trials", "1",
                         "--seed", "1", "--format", "json"});
  const auto b = invoke({"verify", "thm-e", "--e", "6", "--trials", "1",
                         "--seed", "2", "--format", "json"});
  const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_NE(ja["reports"][0]["trial_seeds"], jb["reports"][0]["trial_seeds"]);
  EXPECT_EQ(ja["reports"][0]["verdict"], jb["reports"][0]["verdict"]);
}

TEST(Verify, ParallelAgreesWithSerial) {
  const auto serial = invoke({"verify", "thm-e", "--e", "6", "--trials", "3",
                              "--format", "json"});
  const auto parallel = invoke({"verify", "thm-e", "--e", "6", "--trials", "3",
                                "--parallel", "--format", "json"});
  auto a = nlohmann::json::parse(serial.out);
  auto b = nlohmann::json::parse(parallel.out);
  a.erase("command_line");
  b.erase("command_line");
  EXPECT_EQ(a, b);
}

TEST(Verify, TimingsOptIn) {
  const auto r = invoke({"verify", "thm-e", "--e", "6", "--trials", "1",
                         "--timings", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["reports"][0].contains("degree_microseconds"));
}

TEST(Sweep, BelowFloorIsInconclusiveNotFailure) {
  const auto r = invoke({"sweep", "thm-r", "--d", "10", "--parity", "odd",
                         "--chars", "101", "--trials", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["reports"][0]["verdict"], "inconclusive");
  EXPECT_EQ(doc["reports"][0]["status"], "below-genericity-floor");
}

TEST(Output, WritesFile) {
  const std::string path = ::testing::TempDir() + "hvec_cli_out.txt";
  const auto r = invoke({"check", "1,3,3,1", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("si_sequence: yes"), std::string::npos);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace hvec::cli
