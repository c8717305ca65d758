// Drives the rotwidth executable through a shell.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "support/run_cli.hpp"

namespace {

using rotwidth::testing::CliRun;

CliRun run(const std::string& args, bool merge_stderr = false) {
  return rotwidth::testing::run_cli(args, merge_stderr);
}

std::string data(const std::string& name) { return std::string(ROTWIDTH_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(Cli, EssentialWidthOfTriangle) {
  const CliRun r = run("ew " + data("triangle.txt") + " --oracle-radius 6");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "EW = 10/3\n"));
  EXPECT_TRUE(contains(r.out, "interior_lattice_points = (0, 0) (1, 0)\n"));
  EXPECT_TRUE(contains(r.out, "three_nonaligned_interior = no\n"));
}

TEST(Cli, EssentialWidthOfUnitSquare) {
  const CliRun r = run("ew " + data("unit_square.txt"));
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "EW = 1\n"));
}

TEST(Cli, RootsCertificate) {
  const CliRun yes = run("roots --ew 2221 --length-upper 2");
  ASSERT_EQ(yes.status, 0);
  EXPECT_TRUE(contains(yes.out, "VERDICT: no_roots_above_threshold THRESHOLD: 2221\n"));
  const CliRun edge = run("roots --ew 2220 --length-upper 2");
  ASSERT_EQ(edge.status, 0);
  EXPECT_TRUE(contains(edge.out, "VERDICT: inconclusive THRESHOLD: 2220\n"));
}

TEST(Cli, RootsWritesFile) {
  const std::string path = ::testing::TempDir() + "cert.txt";
  ASSERT_EQ(run("roots --ew 2221 --length-upper 2 --out " + path).status, 0);
  EXPECT_TRUE(contains(slurp(path), "CHECK 2 < 2221/1110 : true\n"));
}

TEST(Cli, DeterministicWithoutMeta) {
  const std::string cmds[] = {
      "--no-meta rotset \"V^2 H^2\" --grid 16 --iters 100 --scheme quasi",
      "--no-meta --seed 7 verify --suite compare-width --count 300",
      "--no-meta verify --suite flow --floors 0.5,0.25",
      "--no-meta ew " + data("triangle.txt"),
  };
  for (const auto& c : cmds) {
    const CliRun a = run(c), b = run(c);
    EXPECT_EQ(a.status, 0) << c;
    EXPECT_EQ(a.out, b.out) << c;
    EXPECT_FALSE(a.out.empty()) << c;
  }
}

TEST(Cli, SeedChangesQuasiRandomSampling) {
  const std::string c = " rotset \"V H\" --grid 8 --iters 50 --scheme quasi";
  EXPECT_NE(run("--no-meta --seed 1" + c).out, run("--no-meta --seed 2" + c).out);
}

TEST(Cli, SearchIsSeededAndValidated) {
  const std::string c = "--no-meta --seed 3 search --count 500";
  const CliRun a = run(c);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, run(c).out);
  EXPECT_TRUE(contains(a.out, "admissible = "));
  EXPECT_TRUE(contains(a.out, "max_EW = "));
  EXPECT_EQ(run("search --count 0").status, 2);
}

TEST(Cli, SvgOutput) {
  const std::string path = ::testing::TempDir() + "rot.svg";
  ASSERT_EQ(run("--no-meta rotset \"V H\" --grid 8 --iters 50 --svg " + path).status, 0);
  const std::string svg = slurp(path);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_TRUE(contains(svg, "</svg>"));
  EXPECT_FALSE(contains(svg, "<!--"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("--version").status, 0);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("--bogus").status, 2);
  EXPECT_EQ(run("ew /nonexistent/poly.txt").status, 2);
  EXPECT_EQ(run("rotset \"V^^2\"").status, 2);
  EXPECT_EQ(run("rotset \"V H\" --grid 1").status, 2);
  EXPECT_EQ(run("roots --ew abc --length-upper 2").status, 2);
  EXPECT_EQ(run("verify --suite nonsense").status, 2);
  EXPECT_EQ(run("flow --floors 0.1,0.5").status, 2);
  // Well-formed runs whose check fails.
  EXPECT_EQ(run("rotset \"V H\" --grid 8 --iters 50 --expect-box 3").status, 1);
  EXPECT_EQ(run("verify --suite power-scaling --grid 8 --iters 50 --tol -1").status, 1);
}

TEST(Cli, BadPolygonReportsLine) {
  const std::string path = ::testing::TempDir() + "bad_poly.txt";
  std::ofstream(path) << "0 0\n1 0\n1 zz\n";
  const CliRun r = run("ew " + path, true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "line 3")) << r.out;
}

TEST(Cli, ParseErrorCarets) {
  const std::pair<std::string, std::size_t> cases[] = {{"V^^2", 2}, {"V H)", 3}, {"T(1,", 4}};
  for (const auto& [text, col] : cases) {
    const CliRun r = run("rotset \"" + text + "\"", true);
    EXPECT_EQ(r.status, 2) << text;
    const std::string expect = "\n" + text + "\n" + std::string(col, ' ') + "^\n";
    EXPECT_TRUE(contains(r.out, expect)) << r.out;
    EXPECT_TRUE(contains(r.out, "at position " + std::to_string(col))) << r.out;
  }
}

TEST(Cli, VerifySuites) {
  const CliRun vnhn = run("--no-meta verify --suite vnhn --n 4");
  EXPECT_EQ(vnhn.status, 0);
  EXPECT_TRUE(contains(vnhn.out, "n=4 crossings=1 bound=2"));
  EXPECT_TRUE(contains(vnhn.out, "displacement(0.5, 0.5) = (4, 4) exact"));
  const CliRun cw = run("--no-meta --seed 7 verify --suite compare-width --count 1000");
  EXPECT_EQ(cw.status, 0);
  EXPECT_TRUE(contains(cw.out, "compare-width: 1000/1000 pass"));
  const CliRun fl = run("--no-meta verify --suite flow --floors 0.5,0.25,0.1,0.05");
  EXPECT_EQ(fl.status, 0);
  EXPECT_TRUE(contains(fl.out, "floor,sup_distance\n"));
  EXPECT_TRUE(contains(fl.out, "weakly decreasing PASS"));
}

TEST(Cli, FlowCsvAndConfig) {
  const std::string cfg = ::testing::TempDir() + "exp.cfg";
  std::ofstream(cfg) << "# line experiment\nsetting = line\nfloors = 0.5,0.1\ngrid = 21\n";
  const std::string csv = ::testing::TempDir() + "exp.csv";
  const CliRun r = run("--no-meta flow --config " + cfg + " --csv " + csv);
  EXPECT_EQ(r.status, 0);
  const std::string body = slurp(csv);
  EXPECT_EQ(body.rfind("floor,sup_distance\n0.5,", 0), 0u) << body;
  std::ofstream(cfg) << "grid = many\n";
  EXPECT_EQ(run("flow --config " + cfg).status, 2);
}

}  // namespace
