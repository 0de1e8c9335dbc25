#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sidon/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::ordered_json json() const { return nlohmann::ordered_json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sidon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ConstructSinger) {
  auto r = run({"construct", "--name", "singer", "--q", "3"});
  ASSERT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["group"]["factors"], nlohmann::ordered_json::array({13}));
  EXPECT_EQ(j["set"].size(), 4u);
  EXPECT_TRUE(j["report"]["sidon"].get<bool>());
  EXPECT_TRUE(j["perfect_difference_set"].get<bool>());
}

TEST(Cli, VerifyAndRoundTrip) {
  auto r = run({"verify", "--group", "7", "--set", "1,2,4"});
  ASSERT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_TRUE(j["report"]["sidon"].get<bool>());
  EXPECT_TRUE(j["perfect_difference_set"].get<bool>());

  // every group+set emitter feeds back into verify --input
  for (auto args : std::vector<std::vector<std::string>>{
           {"construct", "--name", "bose", "--q", "4"},
           {"construct", "--name", "hughes", "--q", "5"},
           {"search", "--group", "3,3"},
           {"planes", "--family", "iii", "--q", "5", "--extract"},
           {"sparse", "--construction", "B", "--m", "101"}}) {
    auto a = run(args);
    ASSERT_EQ(a.code, 0) << args[0];
    const std::string path = testing::TempDir() + "rt.json";
    std::ofstream(path) << a.out;
    auto b = run({"verify", "--input", path});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(b.json()["group"], a.json()["group"]);
    EXPECT_EQ(b.json()["report"]["sidon"], true) << args[0];
    std::remove(path.c_str());
  }
}

TEST(Cli, NonSidonWitness) {
  auto j = run({"verify", "--group", "10", "--set", "0,1,2"}).json();
  EXPECT_FALSE(j["report"]["sidon"].get<bool>());
  EXPECT_FALSE(j["report"]["witness"].is_null());
  auto k = run({"verify", "--group", "3,3", "--set", "[[0,0],[1,0],[0,1]]"}).json();
  EXPECT_TRUE(k["report"]["sidon"].get<bool>());
}

TEST(Cli, Orders) {
  auto r = run({"orders", "--n", "22"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["matches"].empty());
  auto s = run({"orders", "--n", "21"}).json();
  EXPECT_EQ(s["matches"][0]["form"], "q^2+q+1");
  EXPECT_EQ(s["matches"][0]["q"], 4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"construct", "--name", "singer", "--q", "6"}).code, 2);
  EXPECT_EQ(run({"verify", "--group", "7", "--set", "1,9"}).code, 2);
  EXPECT_EQ(run({"verify", "--input", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"sparse", "--construction", "D", "--D", "12"}).code, 2);
  EXPECT_EQ(run({"planes", "--family", "vii", "--q", "3", "--extract"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  auto r = run({"search", "--group", "31", "--budget", "5"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.json()["exhaustive"].get<bool>());
  EXPECT_EQ(run({"conjecture", "--name", "extendable", "--p", "3", "--budget", "3"}).code, 3);
}

TEST(Cli, CubicWitnessPairs) {
  // U = F_7 has several pairs x, -x
  auto r = run({"sparse", "--construction", "F", "--q", "7", "--U", "0,1,2,3,4,5,6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_GT(r.json()["witness_pairs"].size(), 1u);
  auto ok = run({"sparse", "--construction", "F", "--q", "7"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(ok.json()["report"]["sidon"].get<bool>());
}

TEST(Cli, TableCsv) {
  auto r = run({"search", "--table", "1-20", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,sigma,counting_bound,exhaustive,nodes");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 20);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  for (auto args : std::vector<std::vector<std::string>>{{"search", "--group", "4,4"},
                                                         {"search", "--group", "57", "--budget", "200"},
                                                         {"conjecture", "--name", "T-subgroup", "--p", "5"}}) {
    auto base = args;
    base.insert(base.end(), {"--threads", "1"});
    const auto one = run(base).out;
    for (const char* t : {"2", "4"}) {
      auto a = args;
      a.insert(a.end(), {"--threads", t});
      EXPECT_EQ(run(a).out, one) << args[0] << " threads=" << t;
    }
  }
}

TEST(Cli, FrameworkSpec) {
  auto r = run({"sparse", "--construction", "framework", "--spec",
                R"({"field":"rationals","R":10,"components":[{"type":"residue","m":101}]})"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_TRUE(j["sidon"].get<bool>());
  EXPECT_EQ(run({"sparse", "--construction", "framework", "--spec", "{bad"}).code, 2);
}

}  // namespace
