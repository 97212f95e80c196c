#include "pdimer/states.hpp"

#include <string>

#include "pdimer/error.hpp"

namespace pdimer {

namespace {

void validate_density(const Matrix4& m, ErrorKind kind) {
  if (!m.is_finite()) throw Error(kind, "density matrix has non-finite entries");
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTolerance) {
    throw Error(kind, "not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const cplx tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw Error(kind, "trace " + std::to_string(tr.real()) + " differs from 1");
  }
  const auto values = hermitian_eigenvalues(m.hermitian_part());
  if (values.front() < -kEigenClampWindow) {
    throw Error(kind, "eigenvalue " + std::to_string(values.front()) + " below -1e-10");
  }
}

}  // namespace

DensityMatrix4 DensityMatrix4::from_matrix(const Matrix4& m) {
  validate_density(m, ErrorKind::InvalidDensityMatrix);
  return DensityMatrix4(m.hermitian_part());
}

DensityMatrix4 DensityMatrix4::pure(const std::array<cplx, 4>& psi) {
  double norm2 = 0.0;
  for (const auto& x : psi) norm2 += std::norm(x);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorKind::InvalidDensityMatrix, "state vector has zero or non-finite norm");
  }
  return from_matrix(Matrix4::outer(psi) * (1.0 / norm2));
}

DensityMatrix4 DensityMatrix4::product(const Matrix2& rho_a, const Matrix2& rho_b) {
  return from_matrix(kron(rho_a, rho_b));
}

DensityMatrix4 x_state(const XStateParams& p) {
  const double cp = p.c_plus();
  const double cm = p.c_minus();
  Matrix4 m = Matrix4::diagonal({(1.0 + cp + p.h3) / 4.0, (1.0 + cm - p.h3) / 4.0,
                                 (1.0 - cm - p.h3) / 4.0, (1.0 - cp + p.h3) / 4.0});
  m(1, 2) = 0.5 * p.eta;
  m(2, 1) = 0.5 * p.eta;
  validate_density(m, ErrorKind::InvalidXState);
  return DensityMatrix4::from_matrix(m);
}

XStateParams read_x_params(const DensityMatrix4& rho) {
  const double r11 = rho.population(0);
  const double r22 = rho.population(1);
  const double r33 = rho.population(2);
  const double r44 = rho.population(3);
  return {r11 + r22 - r33 - r44, r11 - r22 + r33 - r44, 2.0 * rho(1, 2).real(), r11 - r22 - r33 + r44};
}

std::array<cplx, 4> bell_vector(BellState which) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (which) {
    case BellState::PsiPlus: return {0.0, s, s, 0.0};
    case BellState::PsiMinus: return {0.0, s, -s, 0.0};
    case BellState::PhiPlus: return {s, 0.0, 0.0, s};
    case BellState::PhiMinus: return {s, 0.0, 0.0, -s};
  }
  return {};
}

DensityMatrix4 bell_state(BellState which) { return DensityMatrix4::pure(bell_vector(which)); }

Matrix2 partial_trace(const DensityMatrix4& rho, Subsystem keep) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        if (keep == Subsystem::A) {
          r(i, j) += rho(2 * i + k, 2 * j + k);
        } else {
          r(i, j) += rho(2 * k + i, 2 * k + j);
        }
      }
  return r;
}

BellPopulations bell_populations(const DensityMatrix4& rho) {
  auto expectation = [&](BellState which) {
    const auto v = bell_vector(which);
    cplx acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) acc += std::conj(v[r]) * rho(r, c) * v[c];
    return acc.real();
  };
  return {expectation(BellState::PsiPlus), expectation(BellState::PsiMinus),
          expectation(BellState::PhiPlus), expectation(BellState::PhiMinus)};
}

DensityMatrix4 ground_state() { return DensityMatrix4::pure({1.0, 0.0, 0.0, 0.0}); }

DensityMatrix4 maximally_mixed_state() { return x_state({0.0, 0.0, 0.0, 0.0}); }

DensityMatrix4 classical_state() { return x_state({0.0, 0.0, 0.0, 1.0}); }

}  // namespace pdimer
