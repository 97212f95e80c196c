#include <gtest/gtest.h>

#include <cmath>

#include "pdimer/analytic.hpp"
#include "pdimer/correlations.hpp"
#include "pdimer/dynamics.hpp"
#include "pdimer/error.hpp"
#include "pdimer/random.hpp"

using namespace pdimer;

namespace {

const std::vector<double> kTimes{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};

double max_diff(const std::vector<DensityMatrix4>& a, const std::vector<DensityMatrix4>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, max_abs_diff(a[k].matrix(), b[k].matrix()));
  return m;
}

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::IoError;
}

void expect_valid(const DensityMatrix4& rho) {
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_GE(hermitian_eigenvalues(rho.matrix())[0], -1e-10);
}

}  // namespace

TEST(Resonant, InitialConditionAndLongTime) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const ResonantSolutionParams p{random_x_params(rng, false), 1.0, 0.2, 0.3};
    EXPECT_LT(max_abs_diff(resonant_solution(0.0, p).matrix(), x_state(p.initial).matrix()), 1e-15);
    EXPECT_LT(max_abs_diff(resonant_solution(50.0, p).matrix(), ground_state().matrix()), 1e-15);
  }
  const ResonantSolutionParams mm{{0, 0, 0, 0}, 1.0, 0.82088241315277033, 0.0};
  // Subradiant channel decays at Gamma - gamma; the formula must stay finite far out.
  const auto late = resonant_solution(100.0, mm);
  EXPECT_NEAR(late.population(0), 1.0, 2.0 * std::exp(-(1.0 - mm.collective_decay) * 100.0));
  EXPECT_NEAR(late.matrix().trace().real(), 1.0, 1e-12);
}

TEST(Resonant, MatchesIntegratorOnRandomDraws) {
  Rng rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const auto cp = collective_params(WaveguideParams{}, 0.3 + 1.7 * u(rng));
    const ResonantSolutionParams p{random_x_params(rng, false), cp.decay_rate, cp.collective_decay, cp.coupling};
    std::vector<DensityMatrix4> closed;
    for (double t : kTimes) {
      closed.push_back(resonant_solution(t, p));
      expect_valid(closed.back());
    }
    EXPECT_LT(max_diff(closed, evolve(x_state(p.initial), cp, DriveConfig{}, kTimes).states), 1e-6);
  }
}

TEST(Resonant, Fig1bAtFive) {
  const auto cp = collective_params(WaveguideParams{}, 1.0);
  const ResonantSolutionParams p{{0, 0, 0, 0}, 1.0, cp.collective_decay, cp.coupling};
  const std::vector<double> t{0.0, 5.0};
  const auto num = evolve(maximally_mixed_state(), cp, DriveConfig{}, t);
  EXPECT_LT(max_abs_diff(resonant_solution(5.0, p).matrix(), num.states[1].matrix()), 1e-6);
}

TEST(Resonant, Errors) {
  const ResonantSolutionParams p{{0, 0, 0, 0}, 1.0, 1.0, 0.0};
  EXPECT_EQ(kind_of([&] { (void)resonant_solution(1.0, p); }), ErrorKind::DegenerateRates);
  const ResonantSolutionParams q{{0, 0, 0, 0}, 1.0, -1.0 + 1e-13, 0.0};
  EXPECT_EQ(kind_of([&] { (void)resonant_solution(1.0, q); }), ErrorKind::DegenerateRates);
  const ResonantSolutionParams r{{0, 0, 0, 0}, 1.0, 0.5, 0.0};
  EXPECT_EQ(kind_of([&] { (void)resonant_solution(-1.0, r); }), ErrorKind::DomainError);
}

TEST(Resonant, VIndependenceOfCMinusZeroFamily) {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_x_params(rng, true);
    for (double t : kTimes) {
      const auto a = resonant_solution(t, {x, 1.0, 0.5, 0.0});
      const auto b = resonant_solution(t, {x, 1.0, 0.5, 0.4});
      EXPECT_LT(max_abs_diff(a.matrix(), b.matrix()), 1e-12);
    }
  }
}

TEST(GammaZero, MaximallyMixedAtOne) {
  const auto rho = gamma_zero_solution(1.0, {0, 0, 0, 0}, 1.0);
  EXPECT_NEAR(rho.population(3), 0.033833820809153176, 1e-15);
  EXPECT_NEAR(rho.population(1), 0.15010589977656799, 1e-15);
  EXPECT_NEAR(rho.population(2), 0.15010589977656799, 1e-15);
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-15);
}

TEST(GammaZero, AgreesWithResonantLimitAndIntegrator) {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_x_params(rng, true);
    EXPECT_LT(max_abs_diff(gamma_zero_solution(0.0, x, 1.0).matrix(), x_state(x).matrix()), 1e-15);
    std::vector<DensityMatrix4> closed;
    for (double t : kTimes) {
      closed.push_back(gamma_zero_solution(t, x, 1.0));
      expect_valid(closed.back());
      EXPECT_LT(max_abs_diff(closed.back().matrix(), resonant_solution(t, {x, 1.0, 0.0, 0.0}).matrix()), 1e-10);
    }
    const auto cp = collective_params(WaveguideParams{}, i % 2 ? 0.75 : 1.25);
    EXPECT_LT(max_diff(closed, evolve(x_state(x), cp, DriveConfig{}, kTimes).states), 1e-6);
  }
}

TEST(GammaZero, XiFamilyStaysUncorrelated) {
  for (double c : {-1.0, -0.5, 0.2, 1.0})
    for (double t : {0.3, 1.0, 4.0}) EXPECT_LT(mutual_information(gamma_zero_solution(t, XStateParams::xi(c), 1.0)), 1e-8);
}

TEST(GammaZero, RejectsCMinus) {
  EXPECT_EQ(kind_of([] { (void)gamma_zero_solution(1.0, {0.2, 0.0, 0.0, 0.0}, 1.0); }), ErrorKind::FamilyViolation);
}

TEST(Detuned, ReducesToGammaZeroAtZeroDetuning) {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_x_params(rng, true);
    for (double t : kTimes) {
      EXPECT_LT(max_abs_diff(detuned_solution(t, x, 1.0, 0.3, 0.0).matrix(), gamma_zero_solution(t, x, 1.0).matrix()),
                1e-10);
    }
  }
}

TEST(Detuned, MatchesIntegrator) {
  Rng rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_x_params(rng, true);
    CollectiveParams cp;
    cp.coupling = 2 * u(rng) - 1;
    DriveConfig d;
    d.molecular_detuning = 4 * u(rng) - 2;
    std::vector<DensityMatrix4> closed;
    for (double t : kTimes) {
      closed.push_back(detuned_solution(t, x, 1.0, cp.coupling, d.molecular_detuning));
      expect_valid(closed.back());
    }
    EXPECT_LT(max_diff(closed, evolve(x_state(x), cp, d, kTimes).states), 1e-6);
  }
}

TEST(Detuned, ReferencePoint) {
  // eta = 1/2, c_+ = 0, h3 = -1/2 at delta = 1, V = 1/2, t = 2.
  const XStateParams x{0.0, 0.0, 0.5, -0.5};
  CollectiveParams cp;
  cp.coupling = 0.5;
  DriveConfig d;
  d.molecular_detuning = 1.0;
  const std::vector<double> t{0.0, 2.0};
  const auto num = evolve(x_state(x), cp, d, t);
  EXPECT_LT(max_abs_diff(detuned_solution(2.0, x, 1.0, 0.5, 1.0).matrix(), num.states[1].matrix()), 1e-6);
}

TEST(Detuned, XiFamilyStaysUncorrelated) {
  for (double c : {-1.0, 0.4, 1.0})
    for (double t : {0.5, 2.0, 6.0}) {
      EXPECT_LT(mutual_information(detuned_solution(t, XStateParams::xi(c), 1.0, -0.42, 1.5)), 1e-8);
    }
}

TEST(Detuned, Errors) {
  EXPECT_EQ(kind_of([] { (void)detuned_solution(1.0, {0, 0, 0, 0}, 1.0, 0.0, 0.0); }), ErrorKind::DegenerateCase);
  EXPECT_EQ(kind_of([] { (void)detuned_solution(1.0, {0.1, -0.1, 0, 0}, 1.0, 0.3, 1.0); }),
            ErrorKind::FamilyViolation);
}
