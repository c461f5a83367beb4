#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "cli_cases.hpp"
#include "hyperlat/cli.hpp"

using namespace hyperlat;
using namespace hyperlat::testing;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hyperlat_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

const std::string quadratic_head = "lattice = quadratic\nct1 = 1\nct2 = 1\nct3 = 0\n";

}  // namespace

TEST(Cli, GoldenOutputs) {
  for (const auto& c : golden_cases()) {
    const auto r = cli(c.args);
    EXPECT_EQ(r.code, exit_ok) << c.golden << "\n" << r.err;
    EXPECT_EQ(r.out, read_file(source_path("tests/golden/" + c.golden))) << c.golden;
  }
}

TEST(Cli, Deterministic) {
  for (const auto& c : golden_cases()) EXPECT_EQ(cli(c.args).out, cli(c.args).out) << c.golden;
}

TEST(Cli, ExitCodes) {
  for (const auto& c : exit_cases()) {
    const auto r = cli(c.args);
    EXPECT_EQ(r.code, c.code) << c.name << "\n" << r.err;
    EXPECT_NE(r.err.find(c.err_contains), std::string::npos) << c.name << "\n" << r.err;
  }
}

TEST(Cli, ResidualColumnIsZero) {
  for (const std::string kind : {"polynomial", "second"}) {
    const auto r = cli({"solve", "--spec", source_path("specs/quadratic_demo.spec"), "--kind", kind});
    ASSERT_EQ(r.code, exit_ok);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "s,value,residual");
    int rows = 0;
    while (std::getline(lines, line)) {
      EXPECT_EQ(line.substr(line.rfind(',') + 1), "0") << line;
      ++rows;
    }
    EXPECT_EQ(rows, 13);
  }
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = (std::filesystem::temp_directory_path() / "hyperlat_test_out.csv").string();
  const auto r = cli({"table", "--spec", source_path("specs/quadratic_demo.spec"), "--out", path});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), read_file(source_path("tests/golden/quadratic_demo.table.csv")));
}

TEST(Cli, GeneralizedNeedsP) {
  const auto spec = write_temp("noP.spec", quadratic_head + "sigma = 0, 0, 1\ntau = 1, 2\nn = 2\nwindow = 6..18\n");
  const auto r = cli({"solve", "--spec", spec, "--kind", "generalized"});
  EXPECT_EQ(r.code, exit_usage);
  EXPECT_NE(r.err.find("requires P"), std::string::npos);
}

TEST(Cli, AdjointExamples) {
  const auto flat = write_temp("flat.spec", quadratic_head + "sigma = 1, 0, 0\ntau = 0, 0\nn = 0\nwindow = 6..12\n");
  const auto r = cli({"adjoint", "--spec", flat});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line) && !line.empty()) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    const auto c = line.find(',', b + 1);
    EXPECT_EQ(line.substr(a + 1, b - a - 1), "1") << line;
    EXPECT_EQ(line.substr(b + 1, c - b - 1), "0") << line;
  }

  const auto tiny = write_temp("tiny.spec", quadratic_head + "sigma = 1, 0, 0\ntau = 0, 0\nn = 0\nwindow = 6..6\n");
  EXPECT_EQ(cli({"adjoint", "--spec", tiny}).code, exit_usage);

  // tau* column equals the -tau_{-2}(s+1) column on the demo
  const auto demo = cli({"adjoint", "--spec", source_path("specs/qquadratic_demo.spec")});
  std::istringstream dl(demo.out);
  std::getline(dl, line);
  while (std::getline(dl, line) && !line.empty()) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    const auto c = line.find(',', b + 1);
    EXPECT_EQ(line.substr(b + 1, c - b - 1), line.substr(c + 1)) << line;
  }
}

TEST(Cli, TableExamples) {
  const auto lin = write_temp("lin.spec", quadratic_head + "sigma = 1, 1, 0\ntau = 0, 1\nn = 4\nwindow = 6..18\n");
  const auto r = cli({"table", "--spec", lin});
  ASSERT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("\n0,0,1,"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int k = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 8U);
    EXPECT_EQ(cols[6], std::to_string(-k));
    ++k;
  }
  EXPECT_EQ(k, 5);

  const auto q = write_temp("q.spec", "lattice = qquadratic\np = 2\nc1 = 1\nc2 = 1\nc3 = 0\nsigma = 0, 0, 1\ntau = 1, 2\n"
                                      "n = 3\nwindow = 6..14\n");
  const auto t = cli({"table", "--spec", q});
  EXPECT_NE(t.out.find("\n0,0,1,"), std::string::npos);
  EXPECT_NE(t.out.find("\n1,1,"), std::string::npos);
  EXPECT_NE(t.out.find("\n2,5/2,"), std::string::npos);
  EXPECT_NE(t.out.find("\n3,21/4,"), std::string::npos);
}

TEST(Cli, ApproxBackend) {
  const auto spec = write_temp("approx.spec", quadratic_head + "sigma = 0, 0, 1\ntau = 1, 2\nn = 2\nwindow = 6..18\nbackend = approx\n");
  // values reach 1e6, so rounding leaves residuals near 1e-7: above the absolute default of 1e-9
  const auto strict = cli({"solve", "--spec", spec});
  EXPECT_EQ(strict.code, exit_failure);
  EXPECT_NE(strict.err.find("within tolerance"), std::string::npos);
  EXPECT_EQ(cli({"solve", "--spec", spec, "--tol", "1e-5"}).code, exit_ok);
  EXPECT_EQ(cli({"solve", "--spec", spec, "--tol", "1/100000"}).code, exit_ok);
  EXPECT_EQ(cli({"solve", "--spec", spec, "--tol", "abc"}).code, exit_usage);
  EXPECT_EQ(cli({"solve", "--spec", spec, "--tol", "-1"}).code, exit_usage);
  const auto r = cli({"solve", "--spec", spec, "--tol", "1e-5"});
  EXPECT_NE(r.out.find("\n7,38308.0000000000"), std::string::npos);
}

TEST(Cli, DegenerateLatticeVerify) {
  const auto r = cli({"verify", "--spec", source_path("specs/degenerate_q.spec")});
  EXPECT_EQ(r.code, exit_ok) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, RealBinaryExitCodes) {
  for (const auto& c : exit_cases()) {
    std::string cmd = std::string(HYPERLAT_BINARY);
    for (const auto& a : c.args) cmd += " '" + a + "'";
    cmd += " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(status)) << c.name;
    EXPECT_EQ(WEXITSTATUS(status), c.code) << c.name;
  }
}
