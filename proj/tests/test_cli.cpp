#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/stat.h>
#include <unistd.h>

#include "primeparts/cli.hpp"
#include "primeparts/table_io.hpp"

namespace primeparts {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("primeparts_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
            std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override {
    fs::permissions(dir_, fs::perms::owner_all, fs::perm_options::add);
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, ExactPrintsSequence) {
  const Result r = run({"exact", "--kind", "distinct", "--nmax", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 0 1 1 0 2 0 2 1 1\n");
  EXPECT_EQ(run({"exact", "--kind", "all", "--nmax", "4"}).out, "1 0 1 1 1\n");
}

TEST_F(Cli, ExactWritesAndReusesCache) {
  const std::string cache = path("q.txt");
  const Result cold = run({"exact", "--nmax", "300", "--cache", cache});
  ASSERT_EQ(cold.code, 0) << cold.err;
  ASSERT_TRUE(fs::exists(cache));
  const Result warm = run({"exact", "--nmax", "300", "--cache", cache});
  EXPECT_EQ(warm.out, cold.out);
  // A smaller request is served from the prefix without rewriting the cache.
  const auto before = slurp(cache);
  EXPECT_EQ(run({"exact", "--nmax", "9", "--cache", cache}).out, "1 0 1 1 0 2 0 2 1 1\n");
  EXPECT_EQ(slurp(cache), before);
  // Cache of the other kind is a validation error.
  const Result mismatch = run({"exact", "--kind", "all", "--nmax", "9", "--cache", cache});
  EXPECT_EQ(mismatch.code, 1);
  EXPECT_NE(mismatch.err.find("kind"), std::string::npos);
}

TEST_F(Cli, ExactOutFileIsCacheFormat) {
  const std::string out = path("t.txt");
  ASSERT_EQ(run({"exact", "--nmax", "9", "--out", out}).code, 0);
  EXPECT_EQ(slurp(out), "# kind=distinct n_max=9 format=v1\n0 1\n1 0\n2 1\n3 1\n4 0\n5 2\n6 0\n7 2\n8 1\n9 1\n");
}

TEST_F(Cli, CorruptCacheIsRejected) {
  const std::string cache = path("bad.txt");
  std::ofstream(cache) << "# kind=distinct n_max=9 format=v1\n0 1\n1 0\n";
  const Result r = run({"exact", "--nmax", "9", "--cache", cache});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, Constants) {
  const Result text = run({"constants"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("bF"), std::string::npos);
  EXPECT_NE(text.out.find("0.702879628671"), std::string::npos);
  const Result csv = run({"constants", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "name,value,error_bound");
  EXPECT_NE(csv.out.find("\nF2,0.373424277393"), std::string::npos);
  EXPECT_NE(csv.out.find("\nbB,1.74260039951"), std::string::npos);
}

TEST_F(Cli, AsymForms) {
  const Result q0 = run({"asym", "--n", "100000", "--form", "q0"});
  EXPECT_EQ(q0.code, 0);
  EXPECT_NE(q0.out.find("ln     239.06246687"), std::string::npos) << q0.out;
  EXPECT_NE(q0.out.find("value  6.66055152"), std::string::npos) << q0.out;
  EXPECT_NE(run({"asym", "--n", "100000000", "--form", "pas"}).out.find("OVERFLOW"), std::string::npos);
  EXPECT_EQ(run({"asym", "--n", "1", "--form", "qas"}).code, 1);
  EXPECT_EQ(run({"asym", "--n", "2.5"}).code, 1);
  EXPECT_EQ(run({"asym", "--n", "100", "--form", "zz"}).code, 1);
}

TEST_F(Cli, Saddle) {
  const Result r = run({"saddle", "--n", "10000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ln_rho      71.460422"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("iterations"), std::string::npos);
  EXPECT_EQ(run({"saddle", "--n", "1"}).code, 1);
  EXPECT_EQ(run({"saddle", "--n", "100", "--tol", "0.1"}).code, 1);
}

TEST_F(Cli, CompareWritesCsvAndSummary) {
  const std::string csv = path("cmp.csv");
  const Result r = run({"compare", "--nmax", "2000", "--step", "1", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("skipped   2"), std::string::npos) << r.out;
  const std::string content = slurp(csv);
  EXPECT_EQ(content.substr(0, content.find('\n')), "n,ln_exact,ln_q0,ln_qas,rel_diff");
  EXPECT_EQ(std::count(content.begin(), content.end(), '\n'), 1998);
  EXPECT_EQ(content.find('\r'), std::string::npos);
}

TEST_F(Cli, CompareToUnwritableLocationFailsCleanly) {
  const fs::path locked = dir_ / "locked";
  fs::create_directories(locked);
  fs::permissions(locked, fs::perms::owner_read | fs::perms::owner_exec);
  const std::string target = (locked / "out.csv").string();
  const Result r = run({"compare", "--nmax", "100", "--step", "1", "--csv", target});
  if (::geteuid() != 0) {
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(fs::exists(target));
  }
  const Result missing = run({"compare", "--nmax", "100", "--csv", path("nowhere/out.csv")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_FALSE(fs::exists(path("nowhere/out.csv")));
}

TEST_F(Cli, CompareValidation) {
  EXPECT_EQ(run({"compare", "--nmax", "100", "--step", "0"}).code, 1);
  EXPECT_EQ(run({"compare", "--nmax", "100", "--nmin", "1"}).code, 1);
  EXPECT_EQ(run({"compare", "--nmax", "100", "--nmin", "200"}).code, 1);
  const Result stdout_rows = run({"compare", "--nmax", "20", "--nmin", "17"});
  EXPECT_EQ(stdout_rows.code, 0);
  EXPECT_EQ(std::count(stdout_rows.out.begin(), stdout_rows.out.end(), '\n'), 5);
}

TEST_F(Cli, PlotEmitsDataAndScript) {
  const Result r = run({"plot", "--figure", "3", "--nmax", "3000", "--nmin", "2000", "--step", "100", "--csv",
                        path("fig3.csv"), "--script", path("fig3.gp")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(path("fig3.gp")).find("(1.0/$1):5"), std::string::npos);
  const std::string csv = slurp(path("fig3.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
  EXPECT_EQ(run({"plot", "--figure", "4", "--csv", path("x.csv")}).code, 1);
}

TEST_F(Cli, DeterministicAndCacheTransparent) {
  const std::string cache = path("c.txt");
  const Result plain = run({"compare", "--nmax", "1500", "--step", "7"});
  const Result cold = run({"compare", "--nmax", "1500", "--step", "7", "--cache", cache});
  const Result warm = run({"compare", "--nmax", "1500", "--step", "7", "--cache", cache});
  EXPECT_EQ(plain.out, cold.out);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(run({"constants"}).out, run({"constants"}).out);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"exact"}).code, 1);
  EXPECT_EQ(run({"exact", "--nmax", "9", "--frobnicate"}).code, 1);
  EXPECT_EQ(run({"exact", "--nmax", "9", "--kind", "odd"}).code, 1);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("compare"), std::string::npos);
}

}  // namespace
}  // namespace primeparts
