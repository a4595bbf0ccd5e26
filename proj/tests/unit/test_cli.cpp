#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "gaplab/edge_list_io.hpp"
#include "gaplab/params.hpp"
#include "gaplab/records.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const fs::path capture = fs::temp_directory_path() / "gaplab_cli_capture.txt";
  const std::string cmd = std::string(GAPLAB_CLI) + " " + args + " > " + capture.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  Result r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(capture);
  std::ostringstream text;
  text << in.rdbuf();
  r.out = text.str();
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gaplab_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("generate --model copy").status, 1);  // --n missing
  EXPECT_EQ(run("gap --solver magic x").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, RuntimeErrorsExitTwo) {
  const auto r = run("generate --model pa --targets 2.5 3 --n 10");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("unsupported-target"), std::string::npos);
  EXPECT_EQ(run("generate --model copy --p 1.5 --n 10").status, 2);
}

TEST(Cli, GenerateIsDeterministicAndReadable) {
  const auto dir = scratch("gen");
  ASSERT_EQ(run("generate --model alpha_pa --targets 2.1 2.72 --n 100 --seed 5 --count 2 --out " +
                dir.string()).status, 0);
  const fs::path first = dir / "alpha_pa_n100_0000.txt";
  ASSERT_TRUE(fs::exists(first));
  ASSERT_TRUE(fs::exists(dir / "alpha_pa_n100_0001.txt"));
  const auto graph = gaplab::read_edge_list(first);
  EXPECT_EQ(graph.node_count(), 100u);
  const std::string bytes = slurp(first);
  ASSERT_EQ(run("generate --model alpha_pa --targets 2.1 2.72 --n 100 --seed 5 --out " +
                dir.string()).status, 0);
  EXPECT_EQ(slurp(first), bytes);
  fs::remove_all(dir);
}

TEST(Cli, GapPrintsResult) {
  const auto dir = scratch("gap");
  {
    std::ofstream g(dir / "pair.txt");
    g << "n 2\n0 1\n";
  }
  const auto r = run("gap " + (dir / "pair.txt").string() + " --solver dense");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("\"delta\""), std::string::npos);
  EXPECT_NE(r.out.find("\"s_star\""), std::string::npos);
  {
    std::ofstream g(dir / "bad.txt");
    g << "garbage\n";
  }
  EXPECT_EQ(run("gap " + (dir / "bad.txt").string()).status, 2);
  fs::remove_all(dir);
}

TEST(Cli, SweepAnalyzeFitPlot) {
  const auto dir = scratch("sweep");
  const fs::path out = dir / "run";
  const std::string sweep = "sweep --config " + std::string(GAPLAB_CONFIG_DIR) +
                            "/smoke.json --quiet --seed 3 --solver iterative --out " + out.string();
  const auto r1 = run(sweep + " --workers 1");
  ASSERT_EQ(r1.status, 0) << r1.out;
  for (const char* f : {"records.jsonl", "timings.csv", "summary.csv", "fits.csv", "semilog.svg",
                        "loglog.svg"})
    EXPECT_TRUE(fs::exists(out / f)) << f;
  const auto records = gaplab::read_records(out / "records.jsonl");
  ASSERT_EQ(records.size(), 8u);
  EXPECT_EQ(records.front().solver, "iterative");
  EXPECT_EQ(records.front().seed, gaplab::derive_seed(3, 16, 0));

  const fs::path out2 = dir / "run2";
  ASSERT_EQ(run("sweep --config " + std::string(GAPLAB_CONFIG_DIR) +
                "/smoke.json --quiet --seed 3 --solver iterative --workers 4 --out " + out2.string())
                .status, 0);
  EXPECT_EQ(slurp(out / "records.jsonl"), slurp(out2 / "records.jsonl"));

  const fs::path analysis = dir / "analysis";
  ASSERT_EQ(run("generate --model copy --n 200 --count 3 --out " + (dir / "graphs").string()).status, 0);
  const auto ra = run("analyze --records " + (out / "records.jsonl").string() + " --graphs " +
                      (dir / "graphs" / "copy_n200_0000.txt").string() + " " +
                      (dir / "graphs" / "copy_n200_0001.txt").string() + " --s-t 20 --out " +
                      analysis.string());
  ASSERT_EQ(ra.status, 0) << ra.out;
  EXPECT_EQ(slurp(analysis / "summary.csv"), slurp(out / "summary.csv"));
  EXPECT_TRUE(fs::exists(analysis / "degree_in.csv"));
  EXPECT_TRUE(fs::exists(analysis / "degree_out.csv"));

  const auto rf = run("fit --summary " + (out / "summary.csv").string() + " --out " +
                      (dir / "fits.csv").string());
  ASSERT_EQ(rf.status, 0) << rf.out;
  EXPECT_EQ(slurp(dir / "fits.csv"), slurp(out / "fits.csv"));

  const auto rp = run("plot --summary " + (out / "summary.csv").string() + " --fits " +
                      (out / "fits.csv").string() + " --label smoke --out " + (dir / "plots").string());
  ASSERT_EQ(rp.status, 0) << rp.out;
  EXPECT_TRUE(fs::exists(dir / "plots" / "semilog.svg"));
  EXPECT_TRUE(fs::exists(dir / "plots" / "loglog.svg"));
  fs::remove_all(dir);
}

TEST(Cli, FullScaleScheduleIsFlagged) {
  // Resuming a finished sweep is instant, so only the warning is exercised:
  // run with a bogus output path that cannot be created.
  const auto r = run("sweep --config " + std::string(GAPLAB_CONFIG_DIR) +
                     "/full_scale_copy.json --workers 1 --out /proc/gaplab-no-such-dir");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("full-scale"), std::string::npos);
}
