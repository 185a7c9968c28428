#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cantor_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cantor::cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kSwap = "kernel level=1 depth=1 quasi=0\nrow 0 mass=1/1\n0 0/1\n1 1/1\nrow 1 mass=1/1\n0 1/1\n1 0/1\n";

}  // namespace

TEST_F(CliTest, PpDistWorkedExample) {
  const auto a = file("a.ppc", "ppconfig depth=2 n=1\n00\n");
  const auto b = file("b.ppc", "ppconfig depth=2 n=1\n10\n");
  EXPECT_EQ(run({"pp-dist", a, b, "--terms", "6"}), 0);
  EXPECT_EQ(out_.str(), "29/32\n");
  EXPECT_EQ(run({"--decimal", "4", "pp-dist", a, b, "--terms", "6"}), 0);
  EXPECT_EQ(out_.str(), "0.9063\n");
  EXPECT_EQ(run({"pp-dist", a, b, "--terms", "6", "--decimal", "4"}), 0);
  EXPECT_EQ(out_.str(), "0.9063\n");
}

TEST_F(CliTest, FixpointOfSwapKernel) {
  EXPECT_EQ(run({"fixpoint", "--kernel", file("swap.knl", kSwap)}), 0);
  EXPECT_EQ(out_.str(), "(1/2, 1/2)\n");
}

TEST_F(CliTest, OracleReportsEverySuite) {
  EXPECT_EQ(run({"oracle"}), 0);
  std::size_t lines = 0;
  std::istringstream in(out_.str());
  for (std::string l; std::getline(in, l); ++lines) EXPECT_EQ(l.rfind("PASS ", 0), 0U) << l;
  EXPECT_EQ(lines, 12U);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"nonsense"}), 2);
  EXPECT_EQ(run({"pp-dist", "x"}), 2);
  EXPECT_EQ(run({"validate", (dir_ / "missing.msr").string()}), 1);
  const auto bad = file("bad.msr", "measure depth=1 mass=1/1\n0 1/2\n1 1/3\n");
  EXPECT_EQ(run({"validate", bad}), 1);
  EXPECT_NE(err_.str().find("MassMismatch"), std::string::npos);
  EXPECT_NE(err_.str().find("bad.msr:3:"), std::string::npos);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, SubcommandsProduceExpectedReports) {
  const auto biased = file("b.msr", "measure depth=2 mass=1/1\n00 1/8\n01 3/8\n10 1/8\n11 3/8\n");
  const auto set = file("s.cyl", "cylset depth=2\n01\n11\n");
  EXPECT_EQ(run({"mass", biased, set}), 0);
  EXPECT_EQ(out_.str(), "3/4\n");
  EXPECT_EQ(run({"marginal", biased, "--parity", "odd"}), 0);
  EXPECT_EQ(out_.str(), "measure depth=1 mass=1/1\n0 1/4\n1 3/4\n");
  const auto coin = file("c.msr", "measure depth=1 mass=1\n0 1/2\n1 1/2\n");
  const auto bern = file("d.msr", "measure depth=1 mass=1\n0 1/4\n1 3/4\n");
  EXPECT_EQ(run({"product", coin, bern}), 0);
  EXPECT_EQ(out_.str(), "measure depth=2 mass=1/1\n00 1/8\n01 3/8\n10 1/8\n11 3/8\n");
  EXPECT_EQ(run({"extract", coin, bern, coin}), 0);
  EXPECT_EQ(out_.str(), "indices 0 2\nmeasure depth=1 mass=1/1\n0 1/2\n1 1/2\n");
  const auto tower = file("t.twr", "tower levels=2\nmeasure depth=1 mass=1\n0 1/4\n1 3/4\n"
                                   "measure depth=2 mass=1\n00 1/8\n01 3/8\n10 1/8\n11 3/8\n");
  EXPECT_EQ(run({"extend", "--tower", tower}), 0);
  EXPECT_NE(out_.str().find("joint level=1 01 3/8\n"), std::string::npos);
  EXPECT_NE(out_.str().find("joint level=0 1 3/4\n"), std::string::npos);
  EXPECT_EQ(run({"strict-check", "--kernel", file("swap.knl", kSwap)}), 0);
  EXPECT_EQ(out_.str(), "not strict atom=0 escape=1 mass=1/1\n");
  EXPECT_EQ(run({"disintegrate", "--mu", biased, "--level", "1"}), 0);
  EXPECT_EQ(out_.str().rfind("kernel level=1 depth=1 quasi=0\n", 0), 0U);
  const auto cfg = file("p.ppc", "ppconfig depth=2 n=2\n00\n01\n");
  EXPECT_EQ(run({"pp-push", cfg, "--map", "delta"}), 0);
  EXPECT_EQ(out_.str(), "ppconfig depth=1 n=2\n0\n1\n");
  EXPECT_EQ(run({"pp-push", cfg, "--map", "const:1"}), 0);
  EXPECT_EQ(out_.str(), "ppconfig depth=1 n=2\n1\n1\n");
  const auto tree = file("t.tree", "tree depth=2\n2\n5\n2.3\n2.1\n");
  EXPECT_EQ(run({"select", "--tree", tree, "--word", "2.9"}), 0);
  EXPECT_EQ(out_.str(), "2.1\n");
  EXPECT_EQ(run({"select", "--tree", tree, "--least", "1"}), 0);
  EXPECT_EQ(out_.str(), "2\n");
  EXPECT_EQ(run({"select", "--tree", tree}), 2);
}

TEST_F(CliTest, OutputFileAndDeterminism) {
  const auto knl = file("swap.knl", kSwap);
  const auto target = (dir_ / "report.txt").string();
  EXPECT_EQ(run({"-o", target, "dynkin-refine", "--kernel", knl}), 0);
  EXPECT_TRUE(out_.str().empty());
  std::ifstream in(target);
  std::stringstream first;
  first << in.rdbuf();
  EXPECT_EQ(run({"dynkin-refine", "--kernel", knl}), 0);
  EXPECT_EQ(out_.str(), first.str());
  EXPECT_EQ(run({"dynkin-refine", "--kernel", knl}), 0);
  EXPECT_EQ(out_.str(), first.str());
}
