#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "orthoglide/cli.hpp"
#include "support/fixtures.hpp"

using namespace orthoglide;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "orthoglide");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(ORTHOGLIDE_TEST_TMP) + "/" + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

const std::string kMachine = testing_support::default_machine_path();

}  // namespace

TEST(CliStiffness, IsotropicDefaultPose) {
  const Invocation r = run({"stiffness", "--machine", kMachine});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 16u);
  EXPECT_EQ(l[0], "# kappa");
  EXPECT_EQ(l[1], "# order: wx,wy,wz,vx,vy,vz");
  EXPECT_EQ(l[8], "# K");
  EXPECT_EQ(l[9], "# order: wx,wy,wz,vx,vy,vz");
  EXPECT_EQ(run({"stiffness", "--machine", kMachine, "--at", "0,0,0"}).out, r.out);
}

TEST(CliStiffness, IsotropicStiffnessIsDiagonal) {
  const Invocation r = run({"stiffness", "--machine", kMachine, "--at", "0,0,0"});
  const auto l = lines(r.out);
  for (int row = 0; row < 6; ++row) {
    std::istringstream in(l[static_cast<std::size_t>(10 + row)]);
    std::vector<double> values;
    for (std::string cell; std::getline(in, cell, ',');) values.push_back(std::stod(cell));
    ASSERT_EQ(values.size(), 6u);
    for (int col = 0; col < 6; ++col) {
      if (col == row) continue;
      EXPECT_LT(std::abs(values[static_cast<std::size_t>(col)]), 1e-8 * values[static_cast<std::size_t>(row)]);
    }
  }
}

TEST(CliStiffness, OutsideWorkspace) {
  const Invocation r = run({"stiffness", "--machine", kMachine, "--at", "0.5,0,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliStiffness, BadInputs) {
  EXPECT_EQ(run({"stiffness", "--machine", kMachine, "--at", "1,2"}).code, 1);
  EXPECT_EQ(run({"stiffness", "--machine", "/no/such/file"}).code, 1);
  EXPECT_EQ(run({"stiffness"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(CliSweep, RowsAndHeader) {
  const Invocation r = run({"sweep", "--machine", kMachine, "--param", "h_f", "--metric", "Ka", "--points", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "param_value,metric");
}

TEST(CliSweep, MatchesLibraryBitExactly) {
  const Invocation r = run({"sweep", "--machine", kMachine, "--param", "lambda", "--metric", "Kb", "--points", "7"});
  ASSERT_EQ(r.code, 0);
  const auto s = sweep_parameter(placeholder_parameters(), DesignParameter::FootAngle, 7, Metric::Kb);
  const auto l = lines(r.out);
  for (std::size_t k = 0; k < 7; ++k) {
    const auto comma = l[k + 1].find(',');
    EXPECT_EQ(std::stod(l[k + 1].substr(0, comma)), s.grid[k]);
    EXPECT_EQ(std::stod(l[k + 1].substr(comma + 1)), s.values[k]);
  }
  EXPECT_EQ(r.out, cli::render_sweep_csv(s));
}

TEST(CliSweep, Deterministic) {
  const std::vector<std::string> args{"sweep", "--machine", kMachine, "--param", "d", "--metric", "Krot", "--at", "0.02,0.03,-0.01"};
  const Invocation a = run(args);
  const Invocation b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).size(), 22u);
}

TEST(CliSweep, InvalidRequests) {
  EXPECT_EQ(run({"sweep", "--machine", kMachine, "--param", "E"}).code, 1);
  EXPECT_EQ(run({"sweep", "--machine", kMachine, "--param", "d", "--metric", "Kx"}).code, 1);
  const std::string steep = write_temp("steep.txt", render_machine_file([] {
                                         auto p = placeholder_parameters();
                                         p.foot_angle = 1.2;
                                         return p;
                                       }()));
  EXPECT_EQ(run({"sweep", "--machine", steep, "--param", "lambda"}).code, 1);
}

TEST(CliSweep, WritesOutFile) {
  const std::string path = std::string(ORTHOGLIDE_TEST_TMP) + "/sweep_out.csv";
  const Invocation r = run({"sweep", "--machine", kMachine, "--param", "L_f", "--points", "5", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), run({"sweep", "--machine", kMachine, "--param", "L_f", "--points", "5"}).out);
}

TEST(CliReport, RankedCsv) {
  const Invocation r = run({"report", "--machine", kMachine, "--metric", "Ka"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 9u);
  EXPECT_EQ(l[0], "param,max_relative_change");
  EXPECT_EQ(l[8], "k_act,0");
}

TEST(CliCheck, CorruptedFileStopsBeforeSuites) {
  const std::string path = write_temp("corrupt.txt", "E = 7e10\nthis is not a machine file\n");
  const Invocation r = run({"check", "--machine", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliCheck, OneLinePerSuiteAndConsistentExitCode) {
  const Invocation r = run({"check", "--machine", kMachine});
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), run_checks(placeholder_parameters()).size());
  bool all_pass = true;
  for (const auto& line : l) {
    EXPECT_TRUE(line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0) << line;
    EXPECT_NE(line.find("max_residual="), std::string::npos);
    all_pass = all_pass && line.rfind("PASS ", 0) == 0;
  }
  EXPECT_EQ(r.code, all_pass ? 0 : 4);
  if (!all_pass) {
    EXPECT_NE(r.err.find("check failed: "), std::string::npos);
  }
}

TEST(CliCheck, StructuralSuitesHoldForExtremeParameters) {
  auto p = placeholder_parameters();
  p.foot_angle = 1.55;
  p.foot_height = 1e-4;
  const std::string path = write_temp("extreme.txt", render_machine_file(p));
  const Invocation r = run({"check", "--machine", path});
  for (const auto& suite : {"symmetry", "positive-definite", "isotropic-diagonality", "loop-closure"}) {
    EXPECT_NE(r.out.find(std::string("PASS ") + suite + " "), std::string::npos) << suite << "\n" << r.out;
  }
}
