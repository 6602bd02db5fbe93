#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pwpoly/cli.hpp"
#include "pwpoly/geomoracle.hpp"

using namespace pwpoly;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args)
{
  args.insert(args.begin(), "pwpoly");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json cli_json(std::vector<std::string> args)
{
  args.push_back("--format");
  args.push_back("json");
  auto r = cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, HpolyAllMethods)
{
  auto j = cli_json({"hpoly", "A", "5", "--K", "1,2,4", "--method", "all"});
  const std::vector<int> want{1, 9, 17, 9, 1};
  for (const char* m : {"faces", "precup", "characters"})
    EXPECT_EQ(j["h_polynomial"][m].get<std::vector<int>>(), want) << m;
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["job"]["type"], "A_4");
  EXPECT_EQ(j["job"]["K"].get<std::vector<int>>(), (std::vector<int>{1, 2, 4}));
  for (const auto& c : j["checks"])
    EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(Cli, PrecupListsWK)
{
  auto j = cli_json({"hpoly", "A", "4", "--K", "1,3", "--method", "precup"});
  EXPECT_EQ(j["h_polynomial"]["precup"].get<std::vector<int>>(), (std::vector<int>{1, 6, 6, 1}));
  EXPECT_EQ(j["W_K_set"]["size"], 14);
  EXPECT_EQ(j["W_K_set"]["elements"].size(), 14u);
  EXPECT_FALSE(j["h_polynomial"].contains("faces"));
}

TEST(Cli, TypeBSkipsCharacters)
{
  auto j = cli_json({"hpoly", "B", "3", "--K", "2,3"});
  EXPECT_TRUE(j["h_polynomial"].contains("faces"));
  EXPECT_TRUE(j["h_polynomial"].contains("precup"));
  EXPECT_FALSE(j["h_polynomial"].contains("characters"));
  EXPECT_EQ(j["f_vector"].get<std::vector<int>>(), (std::vector<int>{16, 24, 10, 1}));
}

TEST(Cli, FVectorText)
{
  auto r = cli({"fvector", "A", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(6,6,1)"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("time:"), std::string::npos);
}

TEST(Cli, DeterministicAcrossRunsAndWorkers)
{
  auto a = cli({"sweep", "B", "3", "--format", "json"});
  auto b = cli({"sweep", "B", "3", "--format", "json", "--workers", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = cli({"facets", "D", "3", "--K", "1,2"});
  auto d = cli({"facets", "D", "3", "--K", "1,2"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, VerifySuites)
{
  for (const auto& suite : verify_suites()) {
    auto r = cli({"verify", suite, "A", "3", "--all-K"});
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out << r.err;
  }
  auto j = cli_json({"verify", "orbit-product", "A", "3", "--K", "1,2"});
  bool control = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "alternating-subgroup control") {
      control = true;
      EXPECT_TRUE(c["pass"].get<bool>());
    }
  EXPECT_TRUE(control);
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"hpoly", "E", "3"}).code, 1);
  EXPECT_EQ(cli({"hpoly", "A", "3", "--K", "3"}).code, 1);
  EXPECT_EQ(cli({"hpoly", "A", "3", "--K", "x"}).code, 1);
  EXPECT_EQ(cli({"hpoly", "B", "3", "--method", "characters"}).code, 1);
  EXPECT_EQ(cli({"hpoly", "A", "3", "--method", "guess"}).code, 1);
  EXPECT_EQ(cli({"verify", "nonsense", "A", "3"}).code, 1);
  EXPECT_EQ(cli({"export", "A", "3", "--anchor", "1,1,2"}).code, 1);
  auto r = cli({"frobnicate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, BudgetRefusal)
{
  auto r = cli({"hpoly", "B", "4", "--method", "precup", "--budget", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("384"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"verify", "geometry", "A", "6"}).code, 1);
}

TEST(Cli, ExportRoundTrip)
{
  auto path = std::filesystem::temp_directory_path() / "pwpoly_export_test.json";
  auto r = cli({"export", "B", "3", "--K", "2,3", "--anchor", "-7,-4,-2", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  auto g = import_geometry(j["geometry"]);
  EXPECT_EQ(g.pk.K, (std::vector<int>{2, 3}));
  EXPECT_EQ(g.anchor.a, (RVec{Rational(-7), Rational(-4), Rational(-2)}));
  EXPECT_EQ(g.vertices.size(), 16u);
  EXPECT_EQ(g.hrep, h_representation(g.pk, g.anchor));
  std::filesystem::remove(path);
}

TEST(Cli, ParseJob)
{
  auto job = parse_job({"pwpoly", "verify", "c-coeffs", "D", "4", "--all-K", "--workers", "2"});
  EXPECT_EQ(job.command, "verify");
  EXPECT_EQ(job.suite, "c-coeffs");
  EXPECT_EQ(job.type, make_rstype(Family::D, 4));
  EXPECT_TRUE(job.all_K);
  EXPECT_EQ(job.workers, 2u);
  EXPECT_THROW(parse_job({"pwpoly", "hpoly", "A", "1"}), UsageError);
}
