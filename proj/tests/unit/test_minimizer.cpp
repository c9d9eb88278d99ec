#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "shg/analytic.hpp"
#include "shg/errors.hpp"
#include "shg/minimizer.hpp"

namespace shg {
namespace {

class MinimizerTest : public ::testing::Test {
 protected:
  Grid grid = Grid::make(20.0, 512);
  Params unit = Params::reduced(1.0, 1.0, 14.4);
};

TEST_F(MinimizerTest, ElResidualOfExplicitPulse) {
  EXPECT_LT(el_residual(explicit_pulse(grid), 1.0, unit), 1e-10);
  // Negating both components flips the sign of the quadratic terms, so the
  // negative pulse solves the system with kappa = -1.
  EXPECT_LT(el_residual(explicit_pulse(grid, -1), -1.0, unit), 1e-10);
  EXPECT_GT(el_residual(explicit_pulse(grid, -1), 1.0, unit), 1.0);
  // Flipping only phi is a symmetry of the system.
  PulsePair mirrored = explicit_pulse(grid);
  mirrored.f *= -1.0;
  EXPECT_LT(el_residual(mirrored, 1.0, unit), 1e-10);
}

TEST_F(MinimizerTest, ElResidualOfZeroPairIsVacuous) {
  EXPECT_EQ(el_residual(PulsePair(grid), 1.0, unit), 0.0);
  EXPECT_EQ(el_residual(PulsePair(grid), 5.0, unit), 0.0);
}

TEST_F(MinimizerTest, ElResidualWithWrongMultiplier) {
  // At kappa = 2 the residuals are -Phi Psi and -Phi^2 / 2 exactly.
  const double mismatch = oracle::simpson(
      [](double x) {
        const double a = oracle::phi(x) * oracle::psi(x);
        const double b = 0.5 * oracle::phi(x) * oracle::phi(x);
        return a * a + b * b;
      },
      -40.0, 40.0);
  const double norm = oracle::simpson(
      [](double x) {
        return std::pow(oracle::dphi(x), 2) + std::pow(oracle::dpsi(x), 2) +
               std::pow(oracle::phi(x), 2) + std::pow(oracle::psi(x), 2);
      },
      -40.0, 40.0);
  const double expected = std::sqrt(mismatch / norm);
  EXPECT_NEAR(expected, 3.0 / std::sqrt(7.0), 1e-10);
  EXPECT_NEAR(el_residual(explicit_pulse(grid), 2.0, unit), expected, 1e-9);
}

TEST_F(MinimizerTest, LagrangeMultiplierFormula) {
  EXPECT_NEAR(lagrange_multiplier(21.6, 14.4), 1.0, 1e-15);
  EXPECT_NEAR(lagrange_multiplier(3.6493, 1.0), 2.4329, 1e-4);
  EXPECT_NEAR(lagrange_multiplier(21.6 * std::pow(14.4, -2.0 / 3.0), 1.0), std::cbrt(14.4), 1e-12);
  EXPECT_EQ(lagrange_multiplier(0.0, 1.0), 0.0);
  EXPECT_THROW(lagrange_multiplier(1.0, 0.0), InvalidParameter);
  EXPECT_THROW(lagrange_multiplier(1.0, -2.0), InvalidParameter);
}

TEST_F(MinimizerTest, GaussianStartRecoversExplicitPulse) {
  const GroundState gs = minimize(unit, grid);
  EXPECT_NEAR(gs.m_lambda, 21.6, 1e-6);
  EXPECT_NEAR(gs.kappa, 1.0, 1e-6);
  EXPECT_LT(gs.residual, 1e-10);
  EXPECT_NEAR(constraint(gs.pair), 14.4, 1e-10 * 14.4);
  EXPECT_LT(max_abs_difference(gs.pair, explicit_pulse(grid)), 1e-5);
  EXPECT_LT(reflection_asymmetry(gs.pair), 1e-6);
}

TEST_F(MinimizerTest, MultistartAgreesOnMinimum) {
  const GroundState ref = minimize(unit, grid);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SolverConfig cfg;
    cfg.init.kind = InitKind::seeded_random;
    cfg.init.seed = seed;
    const GroundState gs = minimize(unit, grid, cfg);
    EXPECT_NEAR(gs.m_lambda, ref.m_lambda, 1e-8) << "seed " << seed;
    EXPECT_GE(gs.m_lambda, 21.6 - 1e-6) << "lower value found from seed " << seed;
    EXPECT_LT(max_abs_difference(gs.pair, ref.pair), 1e-6);
  }
}

TEST_F(MinimizerTest, LambdaOneFollowsScaling) {
  const GroundState gs = minimize(Params::reduced(1.0, 1.0, 1.0), grid);
  EXPECT_NEAR(gs.m_lambda, 21.6 * std::pow(14.4, -2.0 / 3.0), 1e-4);
  EXPECT_NEAR(gs.m_lambda, 3.6493, 1e-4);
  EXPECT_NEAR(gs.kappa, std::cbrt(14.4), 1e-6);
}

TEST_F(MinimizerTest, ExplicitStartConvergesImmediately) {
  SolverConfig cfg;
  cfg.init.kind = InitKind::explicit_pulse;
  const GroundState gs = minimize(unit, grid, cfg);
  EXPECT_LE(gs.iterations, 3);
  EXPECT_LT(gs.residual, cfg.tol_residual);
}

TEST_F(MinimizerTest, TraceIsMonotoneAndConstraintHolds) {
  const Params p = Params::reduced(1.0, 3.0, 2.0);
  const GroundState gs = minimize(p, grid);
  ASSERT_GE(gs.trace.size(), 2u);
  for (std::size_t i = 1; i < gs.trace.size(); ++i) {
    EXPECT_LE(gs.trace[i].objective, gs.trace[i - 1].objective * (1 + 1e-13)) << "step " << i;
  }
  EXPECT_NEAR(constraint(gs.pair), 2.0, 1e-12 * 2.0);
  EXPECT_DOUBLE_EQ(gs.kappa, 2.0 * gs.m_lambda / (3.0 * 2.0));
  EXPECT_GT(gs.kappa, 0.0);
}

TEST_F(MinimizerTest, TranslatedStartGivesSameGroundState) {
  const Params p = Params::reduced(2.0, 0.5, 14.4);
  const GroundState a = minimize(p, grid);
  SolverConfig cfg;
  cfg.init.kind = InitKind::custom;
  cfg.init.custom = translate(make_initial_pair(grid, {}), 4.25);
  const GroundState b = minimize(p, grid, cfg);
  EXPECT_NEAR(a.m_lambda, b.m_lambda, 1e-9 * a.m_lambda);
  EXPECT_LT(max_abs_difference(a.pair, b.pair), 1e-6);
}

TEST_F(MinimizerTest, RescaledSolutionSolvesStationarySystem) {
  const GroundState g14 = minimize(unit, grid);
  const PulsePair s14 = rescale_to_solution(g14);
  EXPECT_LT(max_abs_difference(s14, g14.pair), 1e-5);  // kappa = 1: identity
  EXPECT_LT(max_abs_difference(s14, explicit_pulse(grid)), 1e-5);

  const GroundState g1 = minimize(Params::reduced(1.0, 1.0, 1.0), grid);
  const PulsePair s1 = rescale_to_solution(g1);
  EXPECT_LT(max_abs_difference(s1, s14), 1e-5);
  EXPECT_LT(el_residual(s1, 1.0, unit), 1e-9);
}

TEST_F(MinimizerTest, ZeroConstraintInitIsBumped) {
  SolverConfig cfg;
  cfg.init.kind = InitKind::custom;
  RealField f = sample(grid, [](double x) { return std::exp(-x * x / 4); });
  cfg.init.custom = PulsePair(f, RealField(grid));
  const GroundState gs = minimize(unit, grid, cfg);
  EXPECT_NEAR(gs.m_lambda, 21.6, 1e-6);

  cfg.init.custom = PulsePair(grid);
  EXPECT_THROW(minimize(unit, grid, cfg), DegenerateConstraint);
}

TEST_F(MinimizerTest, NonConvergenceCarriesTrace) {
  SolverConfig cfg;
  cfg.max_iter = 3;
  try {
    minimize(unit, grid, cfg);
    FAIL() << "expected ConvergenceFailure";
  } catch (const ConvergenceFailure& e) {
    EXPECT_EQ(e.trace().size(), 4u);
    EXPECT_GT(e.trace().back().residual, cfg.tol_residual);
  }
}

TEST_F(MinimizerTest, UnpreconditionedDescentStillDecreasesQuotient) {
  SolverConfig cfg;
  cfg.preconditioner = Preconditioner::none;
  cfg.max_iter = 50;
  try {
    minimize(unit, grid, cfg);
  } catch (const ConvergenceFailure& e) {
    const auto& tr = e.trace();
    EXPECT_LT(tr.back().objective, tr.front().objective);
  }
}

TEST_F(MinimizerTest, RejectsInvalidConfiguration) {
  SolverConfig cfg;
  cfg.tol_residual = 0.0;
  EXPECT_THROW(minimize(unit, grid, cfg), InvalidConfiguration);
  Params bad = unit;
  bad.lambda = -1.0;
  EXPECT_THROW(minimize(bad, grid), InvalidParameter);
}

}  // namespace
}  // namespace shg
