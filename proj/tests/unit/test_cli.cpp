#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "shg/analytic.hpp"
#include "shg/io.hpp"

namespace shg::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / "shg_cli_test" /
          ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  int invoke(std::vector<std::string> args) {
    out.str("");
    err.str("");
    return run(args, out, err);
  }

  fs::path dir;
  std::ostringstream out;
  std::ostringstream err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_F(CliTest, SolveUnitCase) {
  ASSERT_EQ(invoke({"solve", "--alpha0", "1", "--beta0", "1", "--lambda", "14.4", "--L", "20",
                    "--N", "512", "--out", dir.string()}),
            kOk)
      << err.str();
  const io::Summary s = io::read_summary(dir / "summary.json");
  EXPECT_NEAR(s.m_lambda, 21.6, 1e-6);
  EXPECT_NEAR(s.kappa, 1.0, 1e-6);
  EXPECT_LT(s.residual, 1e-10);
  EXPECT_EQ(slurp(dir / "profile.csv").substr(0, 15), "x,phi,psi,rho\n-");
  EXPECT_TRUE(fs::exists(dir / "trace.csv"));
  EXPECT_TRUE(fs::exists(dir / "solution.csv"));
}

TEST_F(CliTest, SummaryKeysAreFixed) {
  ASSERT_EQ(invoke({"solve", "--N", "256", "--seed", "3", "--out", dir.string()}), kOk);
  const std::string json = slurp(dir / "summary.json");
  std::size_t pos = 0;
  for (const char* key : {"m_lambda", "kappa", "residual", "iterations", "decay_rate_phi",
                          "decay_rate_psi", "seed"}) {
    const std::size_t at = json.find(std::string("\"") + key + "\"", pos);
    ASSERT_NE(at, std::string::npos) << key;
    pos = at;
  }
  EXPECT_EQ(io::read_summary(dir / "summary.json").seed, 3u);
}

TEST_F(CliTest, NegativeLambdaIsUsageError) {
  EXPECT_EQ(invoke({"solve", "--lambda", "-1", "--out", dir.string()}), kUsage);
  EXPECT_NE(err.str().find("lambda must be positive"), std::string::npos) << err.str();
}

TEST_F(CliTest, UnknownFlagIsUsageError) {
  EXPECT_EQ(invoke({"solve", "--no-such-flag"}), kUsage);
  EXPECT_EQ(invoke({}), kUsage);
}

TEST_F(CliTest, InconsistentPhysicalParametersRejected) {
  EXPECT_EQ(invoke({"solve", "--alpha0", "1", "--alpha", "1", "--sigma", "0.5"}), kUsage);
  EXPECT_EQ(invoke({"solve", "--alpha0", "1.5", "--alpha", "1", "--sigma", "0.5", "--N", "256",
                    "--out", dir.string()}),
            kOk)
      << err.str();
}

TEST_F(CliTest, ExplicitInitConvergesImmediately) {
  ASSERT_EQ(invoke({"solve", "--init", "explicit", "--alpha0", "1", "--beta0", "1", "--lambda",
                    "14.4", "--out", dir.string()}),
            kOk);
  EXPECT_LE(io::read_summary(dir / "summary.json").iterations, 5);
}

TEST_F(CliTest, ExhaustedIterationsWriteTrace) {
  EXPECT_EQ(invoke({"solve", "--max-iter", "3", "--out", dir.string()}), kFailure);
  EXPECT_EQ(io::read_table(dir / "trace.csv", io::Format::csv).rows(), 4u);
  EXPECT_FALSE(fs::exists(dir / "summary.json"));
}

TEST_F(CliTest, PetviashviliMatchesExplicitPulse) {
  ASSERT_EQ(invoke({"petviashvili", "--alpha0", "1", "--beta0", "1", "--out", dir.string()}),
            kOk);
  const PulsePair p = io::read_profile(dir / "profile.csv", io::Format::csv);
  EXPECT_LT(max_abs_difference(p, explicit_pulse(p.grid())), 1e-8);
  const io::Summary s = io::read_summary(dir / "summary.json");
  ASSERT_EQ(s.extra.size(), 1u);
  EXPECT_EQ(s.extra[0].first, "stabilization");
  EXPECT_LT(std::abs(s.extra[0].second - 1.0), 1e-10);
  EXPECT_NEAR(s.m_lambda, 21.6, 1e-8);
}

TEST_F(CliTest, PetviashviliAgreesWithSolveFile) {
  ASSERT_EQ(invoke({"petviashvili", "--alpha0", "1", "--beta0", "3", "--out",
                    (dir / "p").string()}),
            kOk);
  ASSERT_EQ(invoke({"solve", "--alpha0", "1", "--beta0", "3", "--out", (dir / "s").string()}),
            kOk);
  const PulsePair a = io::read_profile(dir / "p" / "profile.csv", io::Format::csv);
  const PulsePair b = io::read_profile(dir / "s" / "solution.csv", io::Format::csv);
  EXPECT_LT(max_abs_difference(a, b), 1e-6);
}

TEST_F(CliTest, GammaOutsideWindowIsUsageError) {
  EXPECT_EQ(invoke({"petviashvili", "--gamma", "1.0", "--out", dir.string()}), kUsage);
}

TEST_F(CliTest, EvolveZeroInitGivesZeroSeries) {
  ASSERT_EQ(invoke({"evolve", "--init", "zero", "--N", "64", "--dt", "0.01", "--t-end", "0.5",
                    "--record-every", "5", "--out", dir.string()}),
            kOk)
      << err.str();
  const io::Table t = io::read_table(dir / "series.csv", io::Format::csv);
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "Q", "H", "amp_drift_W", "amp_drift_V",
                                                "phase_W", "phase_V"}));
  EXPECT_EQ(t.rows(), 11u);
  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    for (double v : t.columns[c]) EXPECT_EQ(v, 0.0);
  }
}

TEST_F(CliTest, EvolveFromSolutionFileConservesCharge) {
  ASSERT_EQ(invoke({"petviashvili", "--N", "256", "--format", "json", "--out",
                    (dir / "p").string()}),
            kOk);
  ASSERT_EQ(invoke({"evolve", "--init-file", (dir / "p" / "profile.json").string(), "--sigma",
                    "0.5", "--alpha0", "1", "--beta0", "1", "--t-end", "2", "--order-check",
                    "--dt", "0.02", "--out", (dir / "e").string()}),
            kOk)
      << err.str();
  const io::Table t = io::read_table(dir / "e" / "series.csv", io::Format::csv);
  const auto& q = t.column("Q");
  for (double v : q) EXPECT_NEAR(v, q.front(), 1e-8 * q.front());
  EXPECT_TRUE(fs::exists(dir / "e" / "order.json"));
}

TEST_F(CliTest, EvolveRejectsNonSolution) {
  io::write_profile(dir / "bad.csv", 2.0 * explicit_pulse(Grid::make(20.0, 128)), io::Format::csv);
  EXPECT_EQ(invoke({"evolve", "--init-file", (dir / "bad.csv").string(), "--out", dir.string()}),
            kUsage);
}

TEST_F(CliTest, ValidateOnlyRunsSelectedChecks) {
  ASSERT_EQ(invoke({"validate", "--only", "explicit,gradients"}), kOk) << out.str();
  EXPECT_NE(out.str().find("explicit"), std::string::npos);
  EXPECT_NE(out.str().find("gradients"), std::string::npos);
  EXPECT_EQ(out.str().find("scaling"), std::string::npos);
  EXPECT_NE(out.str().find("2/2 checks passed"), std::string::npos);
  EXPECT_EQ(invoke({"validate", "--only", "nonsense"}), kUsage);
}

TEST_F(CliTest, ValidateUnderResolvedFails) {
  EXPECT_EQ(invoke({"validate", "--only", "decay", "--N", "32"}), kFailure);
  EXPECT_NE(out.str().find("[FAIL]"), std::string::npos);
}

TEST_F(CliTest, SeededRunsAreByteIdentical) {
  for (const char* name : {"a", "b"}) {
    ASSERT_EQ(invoke({"solve", "--init", "random", "--seed", "11", "--N", "256", "--out",
                      (dir / name).string()}),
              kOk);
  }
  for (const char* file : {"profile.csv", "solution.csv", "trace.csv", "summary.json"}) {
    EXPECT_EQ(slurp(dir / "a" / file), slurp(dir / "b" / file)) << file;
  }
}

TEST_F(CliTest, SweepWritesOneDirectoryPerLambda) {
  ASSERT_EQ(invoke({"sweep", "--lambdas", "1,2", "--N", "256", "--out", dir.string()}), kOk);
  const io::Table t = io::read_table(dir / "sweep.csv", io::Format::csv);
  ASSERT_EQ(t.rows(), 2u);
  EXPECT_NEAR(t.column("normalized")[0], t.column("normalized")[1],
              1e-6 * t.column("normalized")[0]);
  EXPECT_TRUE(fs::exists(dir / "lambda_1" / "summary.json"));
}

TEST_F(CliTest, ConfigFileSuppliesFlags) {
  fs::create_directories(dir);
  std::ofstream(dir / "run.toml") << "lambda = 28.8\nN = 256\n";
  ASSERT_EQ(invoke({"solve", "--config", (dir / "run.toml").string(), "--out",
                    (dir / "o").string()}),
            kOk)
      << err.str();
  EXPECT_NEAR(io::read_summary(dir / "o" / "summary.json").m_lambda,
              21.6 * std::pow(2.0, 2.0 / 3.0), 1e-5);
  // Command-line flags override the file.
  ASSERT_EQ(invoke({"solve", "--config", (dir / "run.toml").string(), "--lambda", "14.4",
                    "--out", (dir / "o").string()}),
            kOk);
  EXPECT_NEAR(io::read_summary(dir / "o" / "summary.json").m_lambda, 21.6, 1e-5);
}

}  // namespace
}  // namespace shg::cli
