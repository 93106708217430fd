#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "genbell/errata.hpp"

namespace {

using namespace genbell::cli;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, BellGolden) {
  const Invocation r = invoke({"bell", "--r", "9", "--s", "6", "--max-n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], kSchema);
  std::vector<std::string> values;
  for (const auto& row : j["rows"]) values.push_back(row["value"]);
  EXPECT_EQ(values, (std::vector<std::string>{"1", "1", "207775", "566828686621", "9011375448568566265"}));
}

TEST(Cli, StirlingCsv) {
  const Invocation r = invoke({"stirling", "--r", "1", "--s", "1", "--n", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,value\n1,1\n2,3\n3,1\n");
}

TEST(Cli, DobinskiMatch) {
  const Invocation r = invoke({"dobinski", "--r", "4", "--s", "2", "--n", "3", "--bits", "128"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json row = Json::parse(r.out)["rows"][0];
  EXPECT_EQ(row["integer"], "1045");
  EXPECT_TRUE(row["match"].get<bool>());
}

TEST(Cli, EveryCommandRuns) {
  const std::vector<std::vector<std::string>> commands = {
      {"moments", "--r", "2", "--s", "1", "--max-n", "3"},
      {"moments", "--r", "2", "--s", "2", "--max-n", "3"},
      {"hankel", "--r", "3", "--s", "1", "--max-order", "4"},
      {"egf", "--r", "3", "--max-n", "6"},
      {"egf", "--r", "1", "--max-n", "6"},
      {"asympt", "--family", "31", "--n", "10", "20"},
      {"coherent", "--r", "2", "--s", "1", "--z", "0.5,-0.25"},
      {"errata"},
  };
  for (const auto& args : commands) {
    const Invocation r = invoke(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_NO_THROW(OutputRecord::from_json(Json::parse(r.out))) << args[0];
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bell", "--r", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bell", "--r", "1", "--s", "2", "--max-n", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bell", "--r", "2", "--s", "1", "--max-n", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"coherent", "--r", "2", "--s", "1", "--z", "a,b"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "some"}).code, kExitUsage);
}

TEST(Cli, VerifySmallPasses) {
  const Invocation r = invoke({"verify", "all", "--grid", "small"});
  EXPECT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["summary"]["passed"].get<bool>());
  EXPECT_TRUE(j["summary"]["failures"].empty());
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"dobinski", "--r", "5", "--s", "2", "--n", "4"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  EXPECT_EQ(invoke({"verify", "all"}).out, invoke({"verify", "all"}).out);
}

TEST(Cli, TimingOnlyOnRequest) {
  const Json plain = Json::parse(invoke({"bell", "--r", "2", "--s", "1", "--max-n", "3"}).out);
  EXPECT_FALSE(plain.contains("timing_seconds"));
  const Json timed = Json::parse(invoke({"bell", "--r", "2", "--s", "1", "--max-n", "3", "--timing"}).out);
  EXPECT_TRUE(timed.contains("timing_seconds"));
}

TEST(Output, JsonRoundTrip) {
  OutputRecord rec;
  rec.command = "bell";
  rec.parameters = Json{{"r", 9}, {"s", 6}};
  rec.rows.push_back({{"n", 4}, {"value", "9011375448568566265"}});
  rec.summary["note"] = "x,y \"quoted\"";
  rec.timing_seconds = 0.125;
  EXPECT_EQ(OutputRecord::from_json(Json::parse(rec.to_json().dump())), rec);
  for (const auto& args : std::vector<std::vector<std::string>>{{"hankel", "--r", "2", "--s", "2", "--max-order", "3"},
                                                                {"asympt", "--family", "21", "--n", "5"}}) {
    const std::string text = invoke(args).out;
    const OutputRecord parsed = OutputRecord::from_json(Json::parse(text));
    std::ostringstream again;
    write_json(again, parsed);
    EXPECT_EQ(again.str(), text);
  }
  EXPECT_THROW(OutputRecord::from_json(Json{{"schema", "other/1"}}), genbell::Error);
}

TEST(Output, CsvQuoting) {
  OutputRecord rec;
  rec.rows.push_back({{"a", "x,y"}, {"b", 3}});
  std::ostringstream os;
  write_csv(os, rec);
  EXPECT_EQ(os.str(), "a,b\n\"x,y\",3\n");
}

TEST(Errata, FourEntriesWithExistingTests) {
  const Invocation r = invoke({"errata"});
  ASSERT_EQ(r.code, 0);
  const Json rows = Json::parse(r.out)["rows"];
  ASSERT_EQ(rows.size(), 4U);
  std::set<std::string> registered;
  const auto* unit = ::testing::UnitTest::GetInstance();
  for (int i = 0; i < unit->total_test_suite_count(); ++i) {
    const auto* suite = unit->GetTestSuite(i);
    for (int j = 0; j < suite->total_test_count(); ++j)
      registered.insert(std::string(suite->name()) + "." + suite->GetTestInfo(j)->name());
  }
  for (const auto& row : rows) {
    EXPECT_TRUE(registered.count(row["test_id"].get<std::string>())) << row["test_id"];
    EXPECT_FALSE(row["resolution"].get<std::string>().empty());
  }
}

}  // namespace
