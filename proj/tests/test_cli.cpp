#include "wix/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "wix/constructors.hpp"
#include "wix/error.hpp"
#include "wix/oracle.hpp"
#include "wix/serialize.hpp"
#include "wix/wiener.hpp"

namespace wix::cli {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "wix");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Invocation result;
  result.code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(ParseDegreeListTest, Separators) {
  EXPECT_EQ(parse_degree_list("4,4,3"), (std::vector<int>{4, 4, 3}));
  EXPECT_EQ(parse_degree_list("4 4  3"), (std::vector<int>{4, 4, 3}));
  EXPECT_EQ(parse_degree_list(" 2, 3 "), (std::vector<int>{2, 3}));
  EXPECT_TRUE(parse_degree_list("").empty());
  EXPECT_THROW(parse_degree_list("4,x"), Error);
  EXPECT_THROW(parse_degree_list("3.5"), Error);
}

TEST(CliMinTest, StarJson) {
  const Invocation r = invoke({"min", "--degrees", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"tree\": {\"n\": 4, \"edges\": [[0,1], [0,2], [0,3]]}, \"root\": 0, "
                   "\"wiener\": 9}\n");
}

TEST(CliMinTest, OutputMatchesLibrary) {
  const DegreeSequence ds({4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2});
  const Invocation r = invoke({"min", "--degrees", "2 2 3 3 3 3 3 3 3 4 4 4"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  const Tree t = tree_from_json(j.at("tree"));
  EXPECT_EQ(t, build_greedy_tree(ds).tree());
  EXPECT_EQ(j.at("wiener"), wiener_edges(t));
}

TEST(CliMinTest, Dot) {
  const Invocation r = invoke({"min", "--degrees", "2", "--format", "dot"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "// wiener 4\ngraph {\n  0 -- 1;\n  0 -- 2;\n}\n");
}

TEST(CliMaxTest, DoubleStar) {
  const Invocation r = invoke({"max", "-d", "3,3"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("wiener"), 29);
  EXPECT_FALSE(j.contains("root"));
  EXPECT_EQ(tree_from_json(j.at("tree")), build_greedy_caterpillar(DegreeSequence({3, 3})));
}

TEST(CliWienerTest, PathFromFile) {
  const std::string path = write_temp("p4.json", "{\"n\": 4, \"edges\": [[0,1],[1,2],[2,3]]}");
  const Invocation r = invoke({"wiener", "--input", path});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"pairwise\": 10, \"edges\": 10}\n");
}

TEST(CliWienerTest, BadInput) {
  EXPECT_EQ(invoke({"wiener", "--input", "/nonexistent/tree.json"}).code, kExitInvalidInput);
  const std::string cycle =
      write_temp("cycle.json", "{\"n\": 3, \"edges\": [[0,1],[1,2],[2,0]]}");
  EXPECT_EQ(invoke({"wiener", "--input", cycle}).code, kExitInvalidInput);
  const std::string garbage = write_temp("garbage.json", "not json");
  EXPECT_EQ(invoke({"wiener", "--input", garbage}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"wiener"}).code, kExitInvalidInput);
}

TEST(CliVerifyTest, SmallSweepPasses) {
  const Invocation r = invoke({"verify", "--max-n", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 13u);
}

TEST(CliVerifyTest, SingleSequence) {
  const Invocation r = invoke({"verify", "--degrees", "3,3,2", "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("greedy_matches_min"), true);
  EXPECT_EQ(j.at("caterpillar_matches_max"), true);
}

TEST(CliVerifyTest, CounterexampleExitsTwo) {
  const Invocation single = invoke({"verify", "--degrees", "4,3,3,2"});
  EXPECT_EQ(single.code, kExitViolation);
  EXPECT_EQ(nlohmann::json::parse(single.out).at("max_value"), 124);
  const Invocation sweep = invoke({"verify", "--max-n", "10"});
  EXPECT_EQ(sweep.code, kExitViolation);
  EXPECT_NE(sweep.err.find("{4,3,3,2}"), std::string::npos);
}

TEST(CliVerifyTest, CapExitsThree) {
  EXPECT_EQ(invoke({"verify", "--degrees", "3,3,3", "--cap", "10"}).code, kExitCapExceeded);
  EXPECT_EQ(invoke({"verify", "--max-n", "13"}).code, kExitCapExceeded);
}

TEST(CliVerifyTest, DegreesExcludeMaxN) {
  EXPECT_EQ(invoke({"verify", "--degrees", "3", "--max-n", "5"}).code, kExitInvalidInput);
}

TEST(CliEnumerateTest, Counts) {
  EXPECT_EQ(invoke({"enumerate", "-d", "3,3", "--count-only"}).out, "{\"labeled\": 6}\n");
  EXPECT_EQ(invoke({"enumerate", "-d", "3,3", "--count-only", "--distinct"}).out,
            "{\"labeled\": 6, \"distinct\": 1}\n");
  EXPECT_EQ(invoke({"enumerate", "-d", "3,2,2", "--count-only", "--distinct"}).out,
            "{\"labeled\": 12, \"distinct\": 2}\n");
}

TEST(CliEnumerateTest, Stream) {
  const Invocation all = invoke({"enumerate", "-d", "2,2"});
  EXPECT_EQ(all.code, kExitOk);
  std::istringstream lines(all.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(degree_sequence_of(tree_from_json_string(line)), DegreeSequence({2, 2}));
    ++count;
  }
  EXPECT_EQ(count, 2u);

  const Invocation distinct = invoke({"enumerate", "-d", "2,2", "--distinct"});
  EXPECT_EQ(std::count(distinct.out.begin(), distinct.out.end(), '\n'), 1);

  const Invocation dot = invoke({"enumerate", "-d", "3", "--format", "dot"});
  EXPECT_EQ(dot.out, "graph {\n  0 -- 1;\n  0 -- 2;\n  0 -- 3;\n}\n");
}

TEST(CliEnumerateTest, CapFromEnvironment) {
  ::setenv("WIX_CAP", "3", 1);
  EXPECT_EQ(default_cap(), 3u);
  EXPECT_EQ(invoke({"enumerate", "-d", "3,3"}).code, kExitCapExceeded);
  EXPECT_EQ(invoke({"enumerate", "-d", "3,3", "--cap", "6"}).code, kExitOk);
  ::setenv("WIX_CAP", "junk", 1);
  EXPECT_EQ(default_cap(), kDefaultEnumerationCap);
  ::unsetenv("WIX_CAP");
  EXPECT_EQ(default_cap(), kDefaultEnumerationCap);
}

TEST(CliSearchTest, MinSearchFields) {
  const Invocation r = invoke({"search", "-d", "3,3,3,2,2", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("direction"), "min");
  EXPECT_EQ(j.at("seed"), 7);
  const Tree start = tree_from_json(j.at("start"));
  const Tree end = tree_from_json(j.at("tree"));
  EXPECT_EQ(j.at("start_wiener"), wiener_edges(start));
  EXPECT_EQ(j.at("end_wiener"), wiener_edges(end));
  EXPECT_EQ(degree_sequence_of(end), degree_sequence_of(start));
  EXPECT_LE(j.at("end_wiener").get<WienerValue>(), j.at("start_wiener").get<WienerValue>());
  EXPECT_GE(j.at("end_wiener").get<WienerValue>(),
            wiener_edges(build_greedy_tree(degree_sequence_of(start)).tree()));
  EXPECT_EQ(j.at("trajectory").size(), j.at("moves").get<std::size_t>() + 1);
}

TEST(CliSearchTest, DeterministicAndDirectional) {
  const auto a = invoke({"search", "-d", "4,3,2,2", "--seed", "11", "--direction", "max"});
  const auto b = invoke({"search", "-d", "4,3,2,2", "--seed", "11", "--direction", "max"});
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("direction"), "max");
  EXPECT_GE(j.at("end_wiener").get<WienerValue>(), j.at("start_wiener").get<WienerValue>());
}

TEST(CliSearchTest, FromInputFile) {
  const std::string path = write_temp(
      "spider.json", "{\"n\": 7, \"edges\": [[0,1],[1,2],[2,3],[0,4],[4,5],[0,6]]}");
  const Invocation r = invoke({"search", "--input", path, "--format", "dot"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("// start ", 0), 0u);
  EXPECT_EQ(invoke({"search", "--input", path, "-d", "3"}).code, kExitInvalidInput);
}

TEST(CliTest, InvalidInvocations) {
  EXPECT_EQ(invoke({}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"min"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"min", "-d", "3,1"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"min", "-d", "3,x"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"min", "-d", "3", "--format", "png"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"search", "-d", "3", "--direction", "sideways"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"verify", "-d", "3", "--jobs", "0"}).code, kExitInvalidInput);
}

TEST(CliTest, Help) {
  const Invocation r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

}  // namespace
}  // namespace wix::cli
