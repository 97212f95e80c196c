#include <gtest/gtest.h>

#include "pdimer/error.hpp"
#include "pdimer/random.hpp"
#include "pdimer/states.hpp"

using namespace pdimer;

TEST(XState, NamedExamples) {
  EXPECT_LT(max_abs_diff(x_state({0, 0, 0, 0}).matrix(), Matrix4::identity() * 0.25), 1e-15);
  EXPECT_LT(max_abs_diff(x_state({1, 1, 0, 1}).matrix(), Matrix4::diagonal({1, 0, 0, 0})), 1e-15);
  EXPECT_LT(max_abs_diff(x_state({0, 0, 1, -1}).matrix(), bell_state(BellState::PsiPlus).matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(x_state({0, 0, -1, -1}).matrix(), bell_state(BellState::PsiMinus).matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(classical_state().matrix(), Matrix4::diagonal({0.5, 0, 0, 0.5})), 1e-15);
}

TEST(XState, RoundTripsParameters) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_x_params(rng, i % 2 == 0);
    const auto q = read_x_params(x_state(p));
    EXPECT_NEAR(p.a3, q.a3, 1e-14);
    EXPECT_NEAR(p.b3, q.b3, 1e-14);
    EXPECT_NEAR(p.eta, q.eta, 1e-14);
    EXPECT_NEAR(p.h3, q.h3, 1e-14);
  }
}

TEST(XState, XiFamilyIsProduct) {
  for (double c : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
    const auto rho = x_state(XStateParams::xi(c));
    const auto a = partial_trace(rho, Subsystem::A);
    const auto b = partial_trace(rho, Subsystem::B);
    EXPECT_LT(max_abs_diff(kron(a, b), rho.matrix()), 1e-15);
  }
}

TEST(XState, RejectsUnphysicalParameters) {
  try {
    (void)x_state({0, 0, 2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidXState);
  }
  EXPECT_THROW((void)x_state({1, 1, 0, 0}), Error);
}

TEST(Bell, Matrices) {
  const auto m = bell_state(BellState::PsiMinus);
  EXPECT_NEAR(m(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(m(2, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(m(1, 2).real(), -0.5, 1e-15);
  EXPECT_NEAR(m(2, 1).real(), -0.5, 1e-15);
  const auto p = bell_state(BellState::PhiPlus);
  EXPECT_NEAR(p(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(p(3, 3).real(), 0.5, 1e-15);
  EXPECT_NEAR(p(0, 3).real(), 0.5, 1e-15);
}

TEST(PartialTrace, Examples) {
  for (auto b : {BellState::PsiPlus, BellState::PsiMinus, BellState::PhiPlus, BellState::PhiMinus}) {
    EXPECT_LT(max_abs_diff(partial_trace(bell_state(b), Subsystem::A), Matrix2::identity() * 0.5), 1e-15);
    EXPECT_LT(max_abs_diff(partial_trace(bell_state(b), Subsystem::B), Matrix2::identity() * 0.5), 1e-15);
  }
  EXPECT_LT(max_abs_diff(partial_trace(classical_state(), Subsystem::B), Matrix2::diagonal({0.5, 0.5})), 1e-15);

  Matrix2 ra = Matrix2::diagonal({0.7, 0.3});
  ra(0, 1) = cplx(0.1, 0.2);
  ra(1, 0) = cplx(0.1, -0.2);
  const Matrix2 rb = Matrix2::diagonal({0.4, 0.6});
  const auto prod = DensityMatrix4::product(ra, rb);
  EXPECT_LT(max_abs_diff(partial_trace(prod, Subsystem::A), ra), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(prod, Subsystem::B), rb), 1e-15);
}

TEST(PartialTrace, FactorOrdering) {
  // |10>: A excited, B ground.
  const auto rho = DensityMatrix4::pure({0, 0, 1, 0});
  EXPECT_NEAR(partial_trace(rho, Subsystem::A)(1, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(partial_trace(rho, Subsystem::B)(0, 0).real(), 1.0, 1e-15);
}

TEST(BellPopulations, Examples) {
  const auto mm = bell_populations(maximally_mixed_state());
  EXPECT_NEAR(mm.psi_plus, 0.25, 1e-15);
  EXPECT_NEAR(mm.phi_minus, 0.25, 1e-15);
  const auto pm = bell_populations(bell_state(BellState::PsiMinus));
  EXPECT_NEAR(pm.psi_minus, 1.0, 1e-15);
  EXPECT_NEAR(pm.psi_plus, 0.0, 1e-15);
  const auto c = bell_populations(classical_state());
  EXPECT_NEAR(c.psi_plus, 0.0, 1e-15);
  EXPECT_NEAR(c.psi_minus, 0.0, 1e-15);
  EXPECT_NEAR(c.phi_plus, 0.5, 1e-15);
  EXPECT_NEAR(c.phi_minus, 0.5, 1e-15);
}

TEST(BellPopulations, SumToOne) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) EXPECT_NEAR(bell_populations(random_density_matrix(rng)).sum(), 1.0, 1e-12);
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW((void)DensityMatrix4::from_matrix(Matrix4::identity()), Error);
  EXPECT_THROW((void)DensityMatrix4::from_matrix(Matrix4::diagonal({1.2, -0.2, 0, 0})), Error);
  Matrix4 nh = Matrix4::identity() * 0.25;
  nh(0, 1) = 0.1;
  EXPECT_THROW((void)DensityMatrix4::from_matrix(nh), Error);
  EXPECT_THROW((void)DensityMatrix4::pure({0, 0, 0, 0}), Error);
}

TEST(RandomStates, AreValidAndPurityMatches) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto pure = random_pure_state(rng).matrix();
    EXPECT_NEAR((pure * pure).trace().real(), 1.0, 1e-12);
    const auto rho = random_density_matrix(rng).matrix();
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(rho)[0], -1e-12);
  }
}
