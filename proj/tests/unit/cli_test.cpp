#include <gtest/gtest.h>

#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpwan/cli/commands.hpp"
#include "support/temp_dir.hpp"

namespace lpwan::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result lpwan(std::initializer_list<std::string> args) {
  std::vector<std::string> argv{"lpwan"};
  argv.insert(argv.end(), args);
  std::ostringstream out, err;
  const int status = run(argv, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

json read_json(const fs::path& p) { return json::parse(slurp(p)); }

std::string cal(const char* tag) {
  return (fs::path(LPWAN_TEST_CALIBRATION_DIR) / (std::string(tag) + ".cal")).string();
}

Result simulate(const fs::path& out, const char* scheme, const char* samples, const char* seed) {
  return lpwan({"simulate", "--scheme", scheme, "--samples", samples, "--seed", seed,
                "--calibration", cal(scheme), "--out", out.string()});
}

std::size_t data_rows(const fs::path& csv) {
  std::ifstream in(csv);
  std::string line;
  std::size_t n = 0;
  std::getline(in, line);
  while (std::getline(in, line)) ++n;
  return n;
}

TEST(CliSimulate, SameSeedSameBytes) {
  test::TempDir dir;
  const auto csv = dir / "concat.csv";
  ASSERT_EQ(simulate(csv, "concat", "2000", "7").status, 0);
  const auto first = slurp(csv);
  const auto first_manifest = slurp(csv.string() + ".manifest.json");
  ASSERT_EQ(simulate(csv, "concat", "2000", "7").status, 0);
  EXPECT_EQ(slurp(csv), first);
  EXPECT_EQ(slurp(csv.string() + ".manifest.json"), first_manifest);
  EXPECT_EQ(data_rows(csv), 2000u);

  ASSERT_EQ(simulate(csv, "concat", "2000", "8").status, 0);
  EXPECT_NE(slurp(csv), first);
}

TEST(CliSimulate, ManifestRecordsTheRun) {
  test::TempDir dir;
  const auto csv = dir / "cell.csv";
  ASSERT_EQ(simulate(csv, "cellular", "100", "3").status, 0);
  const auto m = read_json(csv.string() + ".manifest.json");
  EXPECT_EQ(m["command"], "simulate");
  EXPECT_EQ(m["seed"], 3);
  EXPECT_EQ(m["parameters"]["scheme"], "cellular");
  EXPECT_EQ(m["parameters"]["samples"], 100);
  EXPECT_FALSE(m["parameters"]["calibration"].get<std::string>().empty());
  EXPECT_FALSE(m["tool_version"].get<std::string>().empty());
}

TEST(CliSimulate, RerunFromManifestIsByteIdentical) {
  test::TempDir dir;
  const auto csv = dir / "lora.csv";
  ASSERT_EQ(simulate(csv, "unlicensed", "500", "11").status, 0);
  const auto original = slurp(csv);
  const auto manifest = dir / "saved.manifest.json";
  fs::copy_file(csv.string() + ".manifest.json", manifest);
  fs::remove(csv);
  const auto r = lpwan({"simulate", "--from-manifest", manifest.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(slurp(csv), original);
}

TEST(CliSimulate, UsageErrors) {
  test::TempDir dir;
  const auto csv = dir / "x.csv";
  EXPECT_NE(simulate(csv, "bogus", "10", "1").status, 0);
  EXPECT_FALSE(fs::exists(csv));
  EXPECT_NE(lpwan({"simulate", "--scheme", "concat"}).status, 0);
  EXPECT_NE(simulate(csv, "concat", "0", "1").status, 0);
  EXPECT_NE(lpwan({"simulate", "--scheme", "concat", "--out", csv.string(), "--calibration",
                   cal("cellular")})
                .status,
            0);
  EXPECT_NE(lpwan({}).status, 0);
}

TEST(CliSimulate, JsonOutput) {
  test::TempDir dir;
  const auto r = lpwan({"--json", "simulate", "--scheme", "concat", "--samples", "50",
                        "--calibration", cal("concat"), "--out", (dir / "c.csv").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["rows"], 50);
  EXPECT_DOUBLE_EQ(j["data_rate_kbps"].get<double>(), 0.448);
}

TEST(CliAnalyze, StatsAndCurves) {
  test::TempDir dir;
  const auto csv = dir / "concat.csv";
  ASSERT_EQ(simulate(csv, "concat", "10000", "5").status, 0);
  const auto r = lpwan({"analyze", "--in", csv.string(), "--out-stats", (dir / "s.json").string(),
                        "--out-pdf", (dir / "pdf.csv").string(), "--out-cdf",
                        (dir / "cdf.csv").string()});
  ASSERT_EQ(r.status, 0) << r.err;

  const auto s = read_json(dir / "s.json");
  EXPECT_EQ(s["n"], 10000);
  EXPECT_NEAR(s["mean_s"].get<double>(), 3.1836, 0.02 * 3.1836);
  for (const char* key : {"sd_s", "mad_s", "bandwidth", "kde_sd_s"}) {
    EXPECT_GT(s[key].get<double>(), 0.0) << key;
  }
  EXPECT_EQ(data_rows(dir / "pdf.csv"), 150u);
  EXPECT_EQ(data_rows(dir / "pdf.kde.csv"), 1024u);
  EXPECT_EQ(data_rows(dir / "cdf.csv"), 1024u);
  EXPECT_EQ(data_rows(dir / "cdf.kde.csv"), 1024u);
  EXPECT_TRUE(fs::exists(dir / "s.json.manifest.json"));
}

TEST(CliAnalyze, EmptyDatasetFailsWithoutOutputs) {
  test::TempDir dir;
  std::ofstream(dir / "empty.csv").close();
  const auto r = lpwan({"analyze", "--in", (dir / "empty.csv").string(), "--out-stats",
                        (dir / "s.json").string(), "--out-pdf", (dir / "pdf.csv").string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("BadHeader"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir / "s.json"));
  EXPECT_FALSE(fs::exists(dir / "pdf.csv"));
}

TEST(CliAnalyze, MixedDatasetNeedsScheme) {
  test::TempDir dir;
  {
    std::ofstream f(dir / "mixed.csv");
    f << "sample_id,scheme,t_ul_s,t_q_s,t_dl_s,t_rend_s,t_e2e_s\n";
    for (int i = 0; i < 20; ++i) {
      f << i << ",concat,,,,," << 3.0 + 0.01 * i << '\n';
      f << i << ",cellular,,,,," << 2.8 + 0.01 * i << '\n';
    }
  }
  const auto stats = (dir / "s.json").string();
  EXPECT_EQ(lpwan({"analyze", "--in", (dir / "mixed.csv").string(), "--out-stats", stats}).status,
            2);
  ASSERT_EQ(lpwan({"analyze", "--in", (dir / "mixed.csv").string(), "--scheme", "cellular",
                   "--out-stats", stats})
                .status,
            0);
  EXPECT_EQ(read_json(stats)["n"], 20);
}

class CliCompare : public ::testing::Test {
protected:
  static void SetUpTestSuite() {
    dir_ = new test::TempDir;
    ASSERT_EQ(simulate(*dir_ / "concat.csv", "concat", "10000", "7").status, 0);
    ASSERT_EQ(simulate(*dir_ / "cellular.csv", "cellular", "10000", "7").status, 0);
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }
  static inline test::TempDir* dir_ = nullptr;
};

TEST_F(CliCompare, ExcessLatencyAndQoe) {
  const auto out = *dir_ / "cmp.json";
  const auto r = lpwan({"compare", "--in", (*dir_ / "concat.csv").string(), "--in",
                        (*dir_ / "cellular.csv").string(), "--target", "3.0", "--target", "3.5",
                        "--out", out.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = read_json(out);
  ASSERT_EQ(j["datasets"].size(), 2u);
  for (const auto& d : j["datasets"]) EXPECT_EQ(d["qoe"].size(), 2u);
  ASSERT_EQ(j["pairs"].size(), 1u);
  const auto& p = j["pairs"][0];
  EXPECT_EQ(p["a"], "concat");
  EXPECT_EQ(p["b"], "cellular");
  EXPECT_NEAR(p["excess_s"].get<double>(), 0.2836, 0.15 * 0.2836);
  EXPECT_GT(p["excess_pct"].get<double>(), 0.0);
  EXPECT_TRUE(p["intersections"].contains("crossings"));
}

TEST_F(CliCompare, DatasetAgainstItself) {
  const auto out = *dir_ / "self.json";
  const auto csv = (*dir_ / "concat.csv").string();
  ASSERT_EQ(lpwan({"compare", "--in", csv, "--in", csv, "--out", out.string()}).status, 0);
  const auto p = read_json(out)["pairs"][0];
  EXPECT_EQ(p["excess_s"].get<double>(), 0.0);
  EXPECT_TRUE(p["intersections"]["crossings"].empty());
  EXPECT_TRUE(p["intersections"]["degenerate"].get<bool>());
}

TEST_F(CliCompare, NeedsTwoOrThreeInputs) {
  const auto csv = (*dir_ / "concat.csv").string();
  EXPECT_NE(lpwan({"compare", "--in", csv, "--out", (*dir_ / "x.json").string()}).status, 0);
  EXPECT_NE(lpwan({"compare", "--in", csv, "--in", csv, "--in", csv, "--in", csv, "--out",
                   (*dir_ / "x.json").string()})
                .status,
            0);
  EXPECT_FALSE(fs::exists(*dir_ / "x.json"));
}

TEST_F(CliCompare, QoeCommand) {
  const auto out = *dir_ / "qoe.json";
  const auto r = lpwan({"--json", "qoe", "--in", (*dir_ / "cellular.csv").string(), "--target",
                        "3.0", "--target", "100", "--out", out.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto printed = json::parse(r.out);
  const auto j = read_json(out);
  EXPECT_EQ(printed, j);
  EXPECT_EQ(j["scheme"], "cellular");
  EXPECT_EQ(j["n"], 10000);
  ASSERT_EQ(j["reports"].size(), 2u);
  const double p3 = j["reports"][0]["probability_empirical"].get<double>();
  EXPECT_GT(p3, 0.4);
  EXPECT_LT(p3, 0.9);
  EXPECT_EQ(j["reports"][1]["probability_empirical"].get<double>(), 1.0);
  EXPECT_TRUE(j["reports"][1]["meets_threshold"].get<bool>());

  EXPECT_EQ(lpwan({"qoe", "--in", (*dir_ / "cellular.csv").string(), "--target", "3",
                   "--threshold", "1.5", "--out", out.string()})
                .status,
            2);
}

} // namespace
} // namespace lpwan::cli
